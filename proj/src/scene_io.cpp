#include <brickbasis/scene_io.hpp>

#include <brickbasis/errors.hpp>
#include <brickbasis/tree.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <utility>

namespace brickbasis {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int scene_document_version = 1;

ordered_json rational_vector_to_json(const std::vector<rational> &values) {
  ordered_json out = ordered_json::array();
  for (const rational &v : values)
    out.push_back(v.str());
  return out;
}

std::vector<rational> rational_vector_from_json(const ordered_json &node,
                                                const std::string &field,
                                                std::size_t expected_size) {
  if (!node.is_array())
    throw parse_error(field, "expected an array of rational strings");
  if (node.size() != expected_size)
    throw parse_error(field, "expected " + std::to_string(expected_size) +
                                 " entries, found " +
                                 std::to_string(node.size()));
  std::vector<rational> out;
  out.reserve(node.size());
  for (const auto &entry : node) {
    if (!entry.is_string())
      throw parse_error(field, "expected a rational string");
    try {
      out.push_back(rational::parse_canonical(entry.get<std::string>()));
    } catch (const invalid_input &err) {
      throw parse_error(field, err.what());
    }
  }
  return out;
}

} // namespace

std::string export_scene(const scene &scn) {
  ordered_json doc;
  doc["version"] = scene_document_version;
  doc["n"] = scn.spec.n;
  doc["m"] = scn.m;
  doc["s"] = scn.spec.s;
  doc["x"] = rational_vector_to_json(scn.spec.x);
  doc["start"] = scn.start_index;
  doc["target"] = {{"origin", rational_vector_to_json(scn.target.origin)},
                   {"extent", rational_vector_to_json(scn.target.extent)}};
  ordered_json bricks = ordered_json::array();
  for (const box &brick : scn.bricks) {
    ordered_json entry;
    entry["leaf"] = brick.leaf_index;
    entry["rep"] = brick.repetition;
    entry["origin"] = rational_vector_to_json(brick.origin);
    entry["extent"] = rational_vector_to_json(brick.extent);
    bricks.push_back(std::move(entry));
  }
  doc["bricks"] = std::move(bricks);
  doc["palette_seed"] = scn.palette_seed;
  return doc.dump(2) + "\n";
}

scene import_scene(const std::string &text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception &err) {
    throw parse_error("(document)", err.what());
  }

  auto require = [&doc](const char *field) -> const ordered_json & {
    if (!doc.contains(field))
      throw parse_error(field, "missing");
    return doc.at(field);
  };

  if (!require("version").is_number_integer() ||
      doc["version"].get<int>() != scene_document_version)
    throw parse_error("version", "unknown document version");

  if (!require("n").is_number_unsigned() || doc["n"].get<std::size_t>() < 1)
    throw parse_error("n", "expected a positive integer");
  const std::size_t n = doc["n"].get<std::size_t>();
  if (n > 20)
    throw parse_error("n", "n > 20 is outside the supported range");

  if (!require("start").is_number_unsigned())
    throw parse_error("start", "expected a positive integer");
  const std::size_t start = doc["start"].get<std::size_t>();
  if (start < 1 || start >= (std::size_t(1) << (n + 1)))
    throw parse_error("start", "tree index out of range");
  const std::size_t start_height = labeled_tree::height_of_index(start);
  if (start_height >= n)
    throw parse_error("start", "start node is a leaf");

  if (!require("m").is_number_unsigned())
    throw parse_error("m", "expected a positive integer");
  const std::size_t m = doc["m"].get<std::size_t>();
  if (m != n - start_height)
    throw parse_error("m", "m must equal n minus the start height");

  const ordered_json &s_node = require("s");
  if (!s_node.is_array() || s_node.size() != n)
    throw parse_error("s", "expected n integers");
  scene scn;
  scn.spec.n = n;
  for (const auto &entry : s_node) {
    if (!entry.is_number_integer())
      throw parse_error("s", "expected an integer");
    scn.spec.s.push_back(entry.get<long long>());
  }
  scn.spec.x = rational_vector_from_json(require("x"), "x", n);

  scn.start_index = start;
  scn.m = m;

  if (!require("palette_seed").is_number_integer())
    throw parse_error("palette_seed", "expected an integer");
  scn.palette_seed = doc["palette_seed"].get<long long>();

  const ordered_json &target = require("target");
  if (!target.is_object() || !target.contains("origin") ||
      !target.contains("extent"))
    throw parse_error("target", "expected {origin, extent}");
  scn.target.origin =
      rational_vector_from_json(target["origin"], "target.origin", m);
  scn.target.extent =
      rational_vector_from_json(target["extent"], "target.extent", m);
  for (const rational &e : scn.target.extent)
    if (!e.is_positive())
      throw parse_error("target.extent", "extents must be positive");

  const ordered_json &bricks = require("bricks");
  if (!bricks.is_array())
    throw parse_error("bricks", "expected an array");
  const std::size_t first_leaf = std::size_t(1) << n;
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    const std::string field = "bricks[" + std::to_string(i) + "]";
    const auto &entry = bricks[i];
    if (!entry.is_object())
      throw parse_error(field, "expected an object");
    box brick;
    if (!entry.contains("leaf") || !entry["leaf"].is_number_unsigned())
      throw parse_error(field + ".leaf", "expected a positive integer");
    brick.leaf_index = entry["leaf"].get<std::size_t>();
    if (brick.leaf_index < first_leaf || brick.leaf_index >= 2 * first_leaf)
      throw parse_error(field + ".leaf", "not a leaf index of the tree");
    if (!entry.contains("rep") || !entry["rep"].is_number_unsigned() ||
        entry["rep"].get<std::size_t>() < 1)
      throw parse_error(field + ".rep", "expected a positive integer");
    brick.repetition = entry["rep"].get<std::size_t>();
    if (!entry.contains("origin") || !entry.contains("extent"))
      throw parse_error(field, "expected {leaf, rep, origin, extent}");
    brick.origin =
        rational_vector_from_json(entry["origin"], field + ".origin", m);
    brick.extent =
        rational_vector_from_json(entry["extent"], field + ".extent", m);
    for (const rational &e : brick.extent)
      if (!e.is_positive())
        throw parse_error(field + ".extent", "extents must be positive");
    scn.bricks.push_back(std::move(brick));
  }

  return scn;
}

namespace {

// Exact digits when the denominator is 2^a * 5^b; otherwise 17
// significant digits with half-up rounding.
std::string decimal_digits(const bigint &num, const bigint &den);

std::pair<bigint, std::pair<unsigned, unsigned>> strip_2_5(bigint den) {
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  return {den, {twos, fives}};
}

bigint pow10(unsigned k) {
  bigint p = 1;
  for (unsigned i = 0; i < k; ++i)
    p *= 10;
  return p;
}

// Renders digits D with the decimal point k places from the right,
// trimming trailing fraction zeros.
std::string place_point(std::string digits, unsigned k) {
  if (k == 0)
    return digits;
  if (digits.size() <= k)
    digits.insert(0, std::string(k + 1 - digits.size(), '0'));
  digits.insert(digits.size() - k, ".");
  while (digits.back() == '0')
    digits.pop_back();
  if (digits.back() == '.')
    digits.pop_back();
  return digits;
}

std::string decimal_digits(const bigint &num, const bigint &den) {
  const auto [rest, powers] = strip_2_5(den);
  if (rest == 1) {
    const unsigned k = std::max(powers.first, powers.second);
    const bigint scaled = num * (pow10(k) / den);
    return place_point(scaled.str(), k);
  }

  constexpr int significant = 17;
  // value = 0.D * 10^e with D the significant digits.
  const std::string int_digits = bigint(num / den).str();
  long long e = (num >= den) ? static_cast<long long>(int_digits.size()) : 0;
  if (num < den) {
    bigint rem = num;
    while (rem * 10 < den) {
      rem *= 10;
      --e;
    }
  }
  // sig+1 digits, then round half-up on the last.
  const long long shift = significant + 1 - e;
  bigint scaled;
  if (shift >= 0)
    scaled = num * pow10(static_cast<unsigned>(shift)) / den;
  else
    scaled = num / (den * pow10(static_cast<unsigned>(-shift)));
  std::string digits = scaled.str();
  const char round_digit = digits.back();
  digits.pop_back();
  if (round_digit >= '5') {
    std::size_t k = digits.size();
    while (k > 0) {
      --k;
      if (digits[k] != '9') {
        ++digits[k];
        break;
      }
      digits[k] = '0';
      if (k == 0) {
        digits.insert(digits.begin(), '1');
        digits.pop_back();
        ++e;
      }
    }
  }

  if (e >= static_cast<long long>(digits.size()))
    return digits + std::string(static_cast<std::size_t>(e) - digits.size(), '0');
  return place_point(digits, static_cast<unsigned>(
                                 static_cast<long long>(digits.size()) - e));
}

std::array<int, 3> color_rgb(const std::string &name) {
  static const std::map<std::string, std::array<int, 3>> table = {
      {"White", {255, 255, 255}}, {"Blue", {0, 0, 255}},
      {"Yellow", {255, 255, 0}},  {"Pink", {255, 128, 128}},
      {"Green", {0, 255, 0}},     {"Red", {255, 0, 0}},
      {"Cyan", {0, 255, 255}},    {"Magenta", {255, 0, 255}}};
  return table.at(name);
}

} // namespace

std::string decimal_str(const rational &value) {
  if (value.num() == 0)
    return "0";
  const bool negative = value.num() < 0;
  const bigint magnitude = negative ? bigint(-value.num()) : value.num();
  const std::string body = decimal_digits(magnitude, value.den());
  return negative ? "-" + body : body;
}

std::string export_off(const scene &scn) {
  if (scn.m > 3)
    throw invalid_input("off export: only scenes with m <= 3 can be meshed");

  // Pad missing axes to unit thickness for viewing.
  auto corner = [&](const box &b, int mask) {
    std::array<rational, 3> point;
    for (std::size_t k = 0; k < 3; ++k) {
      const rational lo = k < scn.m ? b.origin[k] : rational(0);
      const rational len = k < scn.m ? b.extent[k] : rational(1);
      point[k] = (mask >> k & 1) ? lo + len : lo;
    }
    return point;
  };

  // Corner masks per quad face, outward orientation.
  static const int faces[6][4] = {{0, 2, 3, 1},  // z = lo
                                  {4, 5, 7, 6},  // z = hi
                                  {0, 1, 5, 4},  // y = lo
                                  {2, 6, 7, 3},  // y = hi
                                  {0, 4, 6, 2},  // x = lo
                                  {1, 3, 7, 5}}; // x = hi

  const std::vector<std::string> colors = assign_colors(scn);
  std::ostringstream out;
  out << "OFF\n";
  out << 8 * scn.bricks.size() << " " << 6 * scn.bricks.size() << " 0\n";
  for (const box &brick : scn.bricks) {
    for (int mask = 0; mask < 8; ++mask) {
      const auto point = corner(brick, mask);
      out << decimal_str(point[0]) << " " << decimal_str(point[1]) << " "
          << decimal_str(point[2]) << "\n";
    }
  }
  for (std::size_t i = 0; i < scn.bricks.size(); ++i) {
    const auto rgb = color_rgb(colors[i]);
    const std::size_t base = 8 * i;
    for (const auto &face : faces) {
      out << "4";
      for (int corner_index : face)
        out << " " << base + corner_index;
      out << " " << rgb[0] << " " << rgb[1] << " " << rgb[2] << "\n";
    }
  }
  return out.str();
}

} // namespace brickbasis
