#include <revsynth/errors.hpp>
#include <revsynth/io.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace revsynth
{

namespace
{

struct text_line
{
  std::size_t number;
  std::vector<std::string> tokens;
  std::string rest; /* text after the first token, comments stripped */
};

std::string trim( std::string_view s )
{
  auto const b = s.find_first_not_of( " \t\r\n" );
  if ( b == std::string_view::npos )
    return {};
  auto const e = s.find_last_not_of( " \t\r\n" );
  return std::string( s.substr( b, e - b + 1u ) );
}

/* Splits into non-empty lines, dropping `#` comments. */
std::vector<text_line> tokenize( std::string_view text )
{
  std::vector<text_line> out;
  std::size_t number = 0u;
  std::size_t pos = 0u;
  while ( pos <= text.size() )
  {
    auto const eol = text.find( '\n', pos );
    auto raw = text.substr( pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos );
    ++number;
    if ( auto const hash = raw.find( '#' ); hash != std::string_view::npos )
    {
      raw = raw.substr( 0u, hash );
    }
    text_line line{ number, {}, {} };
    std::istringstream in{ std::string( raw ) };
    for ( std::string tok; in >> tok; )
    {
      line.tokens.push_back( tok );
    }
    if ( !line.tokens.empty() )
    {
      auto const first = raw.find( line.tokens.front() );
      line.rest = trim( raw.substr( first + line.tokens.front().size() ) );
      out.push_back( std::move( line ) );
    }
    if ( eol == std::string_view::npos )
      break;
    pos = eol + 1u;
  }
  return out;
}

unsigned parse_unsigned( const std::string& s, std::size_t line, const char* what )
{
  unsigned v = 0u;
  auto const [ptr, ec] = std::from_chars( s.data(), s.data() + s.size(), v );
  if ( ec != std::errc{} || ptr != s.data() + s.size() )
  {
    throw parse_error( std::string( "expected " ) + what + ", got '" + s + "'", line );
  }
  return v;
}

std::string join( const std::vector<std::string>& parts )
{
  std::string out;
  for ( auto const& p : parts )
  {
    if ( !out.empty() )
      out += ' ';
    out += p;
  }
  return out;
}

} // namespace

/* REAL */

circuit read_real( std::string_view text )
{
  auto const lines = tokenize( text );

  std::optional<unsigned> numvars;
  std::vector<std::string> variables, inputs, outputs;
  std::string constants, garbage;
  bool in_body = false, ended = false;

  circuit c;
  std::map<std::string, line_index, std::less<>> index;

  auto check_count = [&]( std::size_t count, std::size_t line, const char* what ) {
    if ( !numvars )
      throw parse_error( std::string( what ) + " before .numvars", line );
    if ( count != *numvars )
      throw parse_error( std::string( what ) + " lists " + std::to_string( count ) + " entries, .numvars is " +
                             std::to_string( *numvars ),
                         line );
  };

  auto build_lines = [&]( std::size_t line ) {
    if ( variables.empty() )
      throw parse_error( ".begin without .variables", line );
    if ( constants.empty() )
      constants.assign( variables.size(), '-' );
    if ( garbage.empty() )
      garbage.assign( variables.size(), '-' );
    if ( outputs.empty() )
      outputs = variables;

    unsigned var = 0u;
    for ( std::size_t i = 0; i < variables.size(); ++i )
    {
      line_index l;
      switch ( constants[i] )
      {
      case '-':
        l = c.add_input( variables[i], ++var );
        break;
      case '0':
      case '1':
        l = c.add_constant( variables[i], constants[i] == '1' );
        break;
      default:
        throw parse_error( std::string( "invalid .constants character '" ) + constants[i] + "'", line );
      }
      if ( garbage[i] == '1' )
        c.set_garbage( l );
      else if ( garbage[i] != '-' )
        throw parse_error( std::string( "invalid .garbage character '" ) + garbage[i] + "'", line );
      else if ( outputs[i] != variables[i] )
        c.set_primary_output( l, outputs[i] );
      index.emplace( variables[i], l );
    }
  };

  for ( auto const& tl : lines )
  {
    auto const& head = tl.tokens.front();
    if ( ended )
    {
      throw parse_error( "content after .end", tl.number );
    }
    if ( in_body )
    {
      if ( head == ".end" )
      {
        ended = true;
        continue;
      }
      if ( head.size() < 2u || head[0] != 't' )
      {
        throw parse_error( "unknown gate '" + head + "'", tl.number );
      }
      auto const k = parse_unsigned( head.substr( 1u ), tl.number, "gate size" );
      if ( k == 0u || tl.tokens.size() - 1u != k )
      {
        throw parse_error( "gate " + head + " expects " + std::to_string( k ) + " lines, got " +
                               std::to_string( tl.tokens.size() - 1u ),
                           tl.number );
      }
      std::vector<line_index> pos, neg;
      line_index target = 0u;
      for ( std::size_t j = 1; j < tl.tokens.size(); ++j )
      {
        std::string_view name = tl.tokens[j];
        bool const negative = name.starts_with( '-' );
        if ( negative )
          name.remove_prefix( 1u );
        auto const it = index.find( name );
        if ( it == index.end() )
          throw parse_error( "unknown line '" + std::string( name ) + "'", tl.number );
        if ( j + 1u == tl.tokens.size() )
        {
          if ( negative )
            throw parse_error( "target cannot be negated", tl.number );
          target = it->second;
        }
        else
        {
          ( negative ? neg : pos ).push_back( it->second );
        }
      }
      try
      {
        c.add_gate( mpmct_gate( target, pos, neg ) );
      }
      catch ( const std::invalid_argument& e )
      {
        throw parse_error( e.what(), tl.number );
      }
      continue;
    }

    if ( head == ".version" || head == ".model" )
    {
      continue;
    }
    if ( head == ".numvars" )
    {
      if ( tl.tokens.size() != 2u )
        throw parse_error( ".numvars expects one value", tl.number );
      numvars = parse_unsigned( tl.tokens[1], tl.number, "line count" );
    }
    else if ( head == ".variables" )
    {
      variables.assign( tl.tokens.begin() + 1, tl.tokens.end() );
      check_count( variables.size(), tl.number, ".variables" );
      for ( std::size_t i = 0; i < variables.size(); ++i )
      {
        if ( variables[i].starts_with( '-' ) )
          throw parse_error( "line names cannot start with '-'", tl.number );
        for ( std::size_t j = 0; j < i; ++j )
          if ( variables[i] == variables[j] )
            throw parse_error( "duplicate line name '" + variables[i] + "'", tl.number );
      }
    }
    else if ( head == ".inputs" )
    {
      inputs.assign( tl.tokens.begin() + 1, tl.tokens.end() );
      check_count( inputs.size(), tl.number, ".inputs" );
    }
    else if ( head == ".outputs" )
    {
      outputs.assign( tl.tokens.begin() + 1, tl.tokens.end() );
      check_count( outputs.size(), tl.number, ".outputs" );
    }
    else if ( head == ".constants" )
    {
      if ( tl.tokens.size() != 2u )
        throw parse_error( ".constants expects one string", tl.number );
      constants = tl.tokens[1];
      check_count( constants.size(), tl.number, ".constants" );
    }
    else if ( head == ".garbage" )
    {
      if ( tl.tokens.size() != 2u )
        throw parse_error( ".garbage expects one string", tl.number );
      garbage = tl.tokens[1];
      check_count( garbage.size(), tl.number, ".garbage" );
    }
    else if ( head == ".begin" )
    {
      if ( !numvars )
        throw parse_error( "missing .numvars", tl.number );
      build_lines( tl.number );
      in_body = true;
    }
    else
    {
      throw parse_error( "unknown directive '" + head + "'", tl.number );
    }
  }

  if ( !ended )
  {
    auto const last = lines.empty() ? 0u : lines.back().number;
    throw parse_error( in_body ? "missing .end" : "missing .begin", last );
  }
  return c;
}

std::string write_real( const circuit& c )
{
  std::vector<std::string> names, outputs;
  std::string constants, garbage;
  for ( auto const& l : c.lines() )
  {
    names.push_back( l.name );
    outputs.push_back( l.output == output_kind::primary ? l.output_name : l.name );
    constants += l.kind == line_kind::constant ? ( l.constant_value ? '1' : '0' ) : '-';
    garbage += l.output == output_kind::garbage ? '1' : '-';
  }

  std::string out;
  out += ".version 2.0\n";
  out += ".numvars " + std::to_string( c.width() ) + "\n";
  out += ".variables " + join( names ) + "\n";
  out += ".inputs " + join( names ) + "\n";
  out += ".outputs " + join( outputs ) + "\n";
  out += ".constants " + constants + "\n";
  out += ".garbage " + garbage + "\n";
  out += ".begin\n";
  for ( auto const& g : c.gates() )
  {
    std::vector<std::pair<line_index, bool>> controls;
    for ( auto l : g.pos_controls() )
      controls.emplace_back( l, false );
    for ( auto l : g.neg_controls() )
      controls.emplace_back( l, true );
    std::sort( controls.begin(), controls.end() );

    out += 't' + std::to_string( controls.size() + 1u );
    for ( auto const& [l, negative] : controls )
    {
      out += ' ';
      if ( negative )
        out += '-';
      out += c.line( l ).name;
    }
    out += ' ' + c.line( g.target() ).name + '\n';
  }
  out += ".end\n";
  return out;
}

/* function and permutation specs */

function_spec read_function_spec( std::string_view text )
{
  auto const lines = tokenize( text );
  if ( lines.empty() )
  {
    throw parse_error( "empty function spec" );
  }
  auto const& first = lines[0];
  if ( first.tokens[0] != "vars" || first.tokens.size() != 2u )
  {
    throw parse_error( "expected 'vars <n>'", first.number );
  }
  auto const n = parse_unsigned( first.tokens[1], first.number, "variable count" );
  if ( n < 1u || n > max_table_vars )
  {
    throw parse_error( "variable count must be in 1.." + std::to_string( max_table_vars ), first.number );
  }
  if ( lines.size() < 2u )
  {
    throw parse_error( "missing 'tt' or 'anf' line", first.number );
  }
  if ( lines.size() > 2u )
  {
    throw parse_error( "unexpected content", lines[2].number );
  }
  auto const& body = lines[1];
  try
  {
    if ( body.tokens[0] == "tt" )
    {
      if ( body.tokens.size() != 2u )
        throw parse_error( "expected 'tt <hex>'" );
      return { parse_hex( body.tokens[1], n ), function_repr::tt };
    }
    if ( body.tokens[0] == "anf" )
    {
      return { tt_from_anf( parse_anf( body.rest, n ) ), function_repr::anf };
    }
  }
  catch ( const parse_error& e )
  {
    throw parse_error( e.what(), body.number );
  }
  throw parse_error( "expected 'tt' or 'anf', got '" + body.tokens[0] + "'", body.number );
}

std::string write_function_spec( const truth_table& f, function_repr repr )
{
  std::string out = "vars " + std::to_string( f.num_vars() ) + "\n";
  if ( repr == function_repr::tt )
    out += "tt 0x" + to_hex( f ) + "\n";
  else
    out += "anf " + to_string( anf_from_tt( f ) ) + "\n";
  return out;
}

permutation read_permutation_spec( std::string_view text )
{
  auto const lines = tokenize( text );
  if ( lines.empty() || lines[0].tokens[0] != "perm" || lines[0].tokens.size() < 2u )
  {
    throw parse_error( "expected 'perm <n>'", lines.empty() ? 0u : lines[0].number );
  }
  auto const n = parse_unsigned( lines[0].tokens[1], lines[0].number, "variable count" );
  if ( n > max_permutation_width )
  {
    throw parse_error( "permutation width exceeds " + std::to_string( max_permutation_width ), lines[0].number );
  }
  std::vector<std::uint32_t> images;
  for ( std::size_t i = 0; i < lines.size(); ++i )
  {
    for ( std::size_t j = ( i == 0u ? 2u : 0u ); j < lines[i].tokens.size(); ++j )
    {
      images.push_back( parse_unsigned( lines[i].tokens[j], lines[i].number, "image" ) );
    }
  }
  try
  {
    return permutation( n, std::move( images ) );
  }
  catch ( const std::invalid_argument& e )
  {
    throw parse_error( e.what(), lines.back().number );
  }
}

std::string write_permutation_spec( const permutation& p )
{
  std::string out = "perm " + std::to_string( p.num_vars() ) + "\n";
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    out += std::to_string( p[i] );
    out += ( i + 1u == p.size() || i % 16u == 15u ) ? '\n' : ' ';
  }
  return out;
}

any_spec read_any_spec( std::string_view text )
{
  auto const lines = tokenize( text );
  if ( !lines.empty() && lines[0].tokens[0] == "perm" )
  {
    return read_permutation_spec( text );
  }
  return read_function_spec( text );
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot open '" + path + "'" );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file( const std::string& path, std::string_view contents )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw std::runtime_error( "cannot write '" + path + "'" );
  }
  out << contents;
}

} // namespace revsynth
