#include "fockradial/io.hpp"

#include <fstream>
#include <sstream>

namespace fockradial::io {

namespace {

json complex_json(Complex c)
{
  return json{{"re", c.real()}, {"im", c.imag()}};
}

Complex complex_from(const json& j)
{
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() || !j["im"].is_number())
    throw FormatError("expected {\"re\": number, \"im\": number}");
  return {j["re"].get<double>(), j["im"].get<double>()};
}

json terms_json(const CoefficientMap& f)
{
  json terms = json::array();
  for (const auto& [alpha, a] : f.terms())
    terms.push_back(json{{"alpha", alpha.exponents()}, {"re", a.real()}, {"im", a.imag()}});
  return json{{"dim", f.dim()}, {"terms", std::move(terms)}};
}

std::size_t read_dim(const json& j)
{
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() < 1)
    throw FormatError("missing or invalid \"dim\"");
  return j["dim"].get<std::size_t>();
}

std::pair<std::size_t, CoefficientMap::Terms> read_terms(const json& j)
{
  const std::size_t dim = read_dim(j);
  if (!j.contains("terms") || !j["terms"].is_array()) throw FormatError("missing \"terms\" array");
  CoefficientMap::Terms terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("alpha") || !t["alpha"].is_array())
      throw FormatError("term without an \"alpha\" array");
    std::vector<unsigned> e;
    for (const auto& v : t["alpha"]) {
      if (!v.is_number_unsigned()) throw FormatError("alpha entries must be non-negative integers");
      e.push_back(v.get<unsigned>());
    }
    MultiIndex alpha(std::move(e));
    if (alpha.dim() != dim) throw FormatError("alpha " + alpha.to_string() + " has the wrong length");
    if (!terms.emplace(alpha, complex_from(t)).second)
      throw FormatError("duplicate alpha " + alpha.to_string());
  }
  return {dim, std::move(terms)};
}

unsigned cap_for(const CoefficientMap::Terms& terms)
{
  return terms.empty() ? kDefaultDegreeCap : std::max(kDefaultDegreeCap, terms.rbegin()->first.degree());
}

std::vector<double> read_doubles(const json& j, const char* key)
{
  if (!j.contains(key) || !j[key].is_array()) throw FormatError(std::string("missing \"") + key + "\" array");
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw FormatError(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(v.get<double>());
  }
  return out;
}

template <class Fn>
auto rethrow_as_format_error(Fn&& fn)
{
  try {
    return fn();
  } catch (const ArgumentError& e) {
    throw FormatError(e.what());
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

} // namespace

json to_json(const HermiteExpansion& f)
{
  return terms_json(f);
}

json to_json(const FockSeries& F)
{
  json j = terms_json(F);
  j["space"] = "fock";
  return j;
}

json to_json(const SampledFunction& f)
{
  std::vector<double> re;
  std::vector<double> im;
  re.reserve(f.grid_size());
  im.reserve(f.grid_size());
  for (const auto& v : f.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return json{{"dim", f.dim()},
              {"n", f.order()},
              {"weighting", "gaussian-factored"},
              {"values_re", std::move(re)},
              {"values_im", std::move(im)}};
}

json to_json(const RadialReport& r)
{
  json profile = json::array();
  if (r.profile)
    for (const auto& c : r.profile->c) profile.push_back(complex_json(c));
  return json{{"is_radial", r.is_radial},
              {"odd_mass", r.odd_mass},
              {"shell_deviations", r.shell_deviations},
              {"profile", std::move(profile)},
              {"tol", r.tol}};
}

json to_json(const RadialProfile& p)
{
  json c = json::array();
  for (const auto& v : p.c) c.push_back(complex_json(v));
  return json{{"origin_dim", p.origin_dim}, {"c", std::move(c)}};
}

HermiteExpansion hermite_expansion_from_json(const json& j)
{
  return rethrow_as_format_error([&] {
    if (j.is_object() && j.contains("space") && j["space"] != "hermite")
      throw FormatError("expected a Hermite expansion, got space " + j["space"].dump());
    auto [dim, terms] = read_terms(j);
    const unsigned cap = cap_for(terms);
    return HermiteExpansion(dim, std::move(terms), cap);
  });
}

FockSeries fock_series_from_json(const json& j)
{
  return rethrow_as_format_error([&] {
    if (!j.is_object() || !j.contains("space") || j["space"] != "fock")
      throw FormatError("expected \"space\": \"fock\"");
    auto [dim, terms] = read_terms(j);
    const unsigned cap = cap_for(terms);
    return FockSeries(dim, std::move(terms), cap);
  });
}

SampledFunction sampled_function_from_json(const json& j)
{
  return rethrow_as_format_error([&] {
    const std::size_t dim = read_dim(j);
    if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::size_t>() < 1)
      throw FormatError("missing or invalid \"n\"");
    if (!j.contains("weighting") || j["weighting"] != "gaussian-factored")
      throw FormatError("expected \"weighting\": \"gaussian-factored\"");
    const auto re = read_doubles(j, "values_re");
    const auto im = read_doubles(j, "values_im");
    if (re.size() != im.size()) throw FormatError("values_re and values_im differ in length");
    std::vector<Complex> values(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) values[i] = {re[i], im[i]};
    return SampledFunction(dim, j["n"].get<std::size_t>(), std::move(values));
  });
}

RadialProfile radial_profile_from_json(const json& j)
{
  return rethrow_as_format_error([&] {
    if (!j.is_object() || !j.contains("origin_dim") || !j["origin_dim"].is_number_unsigned())
      throw FormatError("missing or invalid \"origin_dim\"");
    if (!j.contains("c") || !j["c"].is_array()) throw FormatError("missing \"c\" array");
    RadialProfile p{j["origin_dim"].get<std::size_t>(), {}};
    if (p.origin_dim < 1) throw FormatError("origin_dim must be >= 1");
    for (const auto& v : j["c"]) p.c.push_back(complex_from(v));
    return p;
  });
}

RadialReport radial_report_from_json(const json& j)
{
  return rethrow_as_format_error([&] {
    RadialReport r;
    r.is_radial = j.at("is_radial").get<bool>();
    r.odd_mass = j.at("odd_mass").get<double>();
    r.shell_deviations = j.at("shell_deviations").get<std::vector<double>>();
    r.tol = j.at("tol").get<double>();
    if (r.is_radial) {
      RadialProfile p{0, {}};
      for (const auto& v : j.at("profile")) p.c.push_back(complex_from(v));
      r.profile = std::move(p);
    }
    return r;
  });
}

bool is_sampled_function(const json& j)
{
  return j.is_object() && j.contains("values_re");
}

json read_json_file(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text << '\n';
  if (!out) throw FormatError("write failed for " + path.string());
}

} // namespace fockradial::io
