#include <brickbasis/rational.hpp>

#include <cctype>

namespace brickbasis {

namespace {

bool parse_integer(const std::string &text, std::size_t begin, std::size_t end,
                   bigint &out) {
  if (begin >= end)
    return false;
  std::size_t i = begin;
  if (text[i] == '-' || text[i] == '+')
    ++i;
  if (i >= end)
    return false;
  for (std::size_t k = i; k < end; ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      return false;
  out = bigint(text.substr(begin, end - begin));
  return true;
}

} // namespace

rational rational::parse(const std::string &text) {
  bigint num, den = 1;
  std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = parse_integer(text, 0, text.size(), num);
  } else {
    ok = parse_integer(text, 0, slash, num) &&
         parse_integer(text, slash + 1, text.size(), den);
  }
  if (!ok)
    throw invalid_input("rational: cannot parse '" + text + "'");
  return rational(num, den);
}

rational rational::parse_canonical(const std::string &text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos)
    throw invalid_input("rational: '" + text + "' is not in canonical p/q form");
  rational value = parse(text);
  if (value.str() != text)
    throw invalid_input("rational: '" + text +
                        "' is not canonical (expected '" + value.str() + "')");
  return value;
}

} // namespace brickbasis
