#include "cablecone/pipeline.hpp"

#include <cstdio>
#include <sstream>

#include "cablecone/cfk_io.hpp"
#include "cablecone/reduction.hpp"
#include "json.hpp"

namespace cablecone {

using ordered_json = nlohmann::ordered_json;

KnotComplex knot_from_spec(const std::string& spec) {
  const std::string prefix = "torus:2,";
  if (spec.rfind(prefix, 0) != 0) throw InputError("unsupported knot '" + spec + "' (expected torus:2,<q>)");
  try {
    return staircase_t2(parse_integer(spec.substr(prefix.size())));
  } catch (const std::exception& e) {
    throw InputError("bad knot '" + spec + "': " + e.what());
  }
}

SurgerySpec parse_surgery(const std::string& text) {
  try {
    if (text == "1") return SurgerySpec::plus_one();
    if (text.rfind("1/", 0) == 0) return SurgerySpec::one_over(parse_integer(text.substr(2)));
  } catch (const std::exception& e) {
    throw InputError("bad surgery '" + text + "': " + e.what());
  }
  throw InputError("unsupported surgery '" + text + "' (expected 1 or 1/<p>)");
}

Window parse_window(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("bad window '" + text + "' (expected a,b)");
  try {
    return {parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1))};
  } catch (const std::exception& e) {
    throw InputError("bad window '" + text + "': " + e.what());
  }
}

namespace {

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string log_text(const std::vector<Cancellation>& log) {
  std::string s;
  for (const auto& c : log) {
    s += c.source + ">" + c.target + "@" + std::to_string(c.u_power);
    for (const auto& z : c.rewritten) s += "," + z;
    s += ";";
  }
  return s;
}

}  // namespace

Report run_pipeline(const PipelineInput& in) {
  const KnotComplex knot = in.mirror ? dual(in.knot) : in.knot;
  if (auto v = validate(knot); !v.empty()) throw InputError(CfkValidationError(v).what());

  Report r;
  r.knot = in.knot_label;
  r.cable_n = in.n;
  r.surgery = in.surgery.to_string();
  r.mirror = in.mirror;
  r.cfk = format_cfk(knot);

  FilteredComplex cone;
  try {
    cone = build_cone(knot, in.n, in.surgery, in.window);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  r.window = cone.meta().window;
  r.generators_cone = cone.size();

  const ReducedComplex red = reduce(cone);
  const FilteredComplex& f = red.complex;
  r.generators_reduced = f.size();
  for (std::size_t k = 0; k < f.size(); ++k)
    for (const auto& a : f.arrows(k)) {
      auto [di, dj] = f.drops(k, a);
      r.reduced_differential.push_back({f.gen(k).id, f.gen(a.to).id, a.u_power, di, dj});
    }
  r.cancellations = red.log.size();
  r.provenance_digest = fnv1a64(log_text(red.log));

  const LaurentHomology h = homology_laurent(f);
  r.homology_rank = h.total();
  try {
    r.d_invariant = d_invariant(f);
  } catch (const std::domain_error& e) {
    throw InputError(std::string("unexpected cone: ") + e.what());
  }

  const KnotComplex uv = to_uv_presentation(red);
  try {
    const auto z = standardize_z(uv);
    r.standard_sequence = z.seq;
    r.phi = phi_from_standard(z);
    r.standard_sequence_status = "ok";
  } catch (const NotKnotLike& e) {
    r.standard_sequence_status = "not_applicable";
    r.standard_sequence_detail = e.what();
  } catch (const StandardizationIncomplete& e) {
    r.standard_sequence_status = "incomplete";
    r.standard_sequence_detail = e.what();
  }
  try {
    const auto x = standardize_x(uv);
    r.standard_complex_x = x.edges;
    r.phi_ij = phi_from_standard(x);
    if (phi_from_standard_rv(x) != r.phi_ij) throw StandardizationIncomplete("R_U and R_V edge counts disagree");
    r.standard_complex_x_status = "ok";
  } catch (const std::runtime_error& e) {
    r.standard_complex_x.clear();
    r.phi_ij.clear();
    r.standard_complex_x_status = "incomplete";
    r.standard_complex_x_detail = e.what();
  }
  return r;
}

int exit_code(const Report& r) {
  return r.standard_sequence_status == "incomplete" || r.standard_complex_x_status == "incomplete" ? 2 : 0;
}

namespace {

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["input"] = {{"knot", r.knot},
                {"cable_n", r.cable_n},
                {"surgery", r.surgery},
                {"window", {r.window.lo, r.window.hi}},
                {"mirror", r.mirror},
                {"cfk", r.cfk}};
  j["generators"] = {{"cone", r.generators_cone}, {"reduced", r.generators_reduced}};
  j["reduced_differential"] = ordered_json::array();
  for (const auto& a : r.reduced_differential)
    j["reduced_differential"].push_back({{"source", a.source},
                                         {"target", a.target},
                                         {"u_power", a.u_power},
                                         {"drop_i", a.drop_i},
                                         {"drop_j", a.drop_j.to_string()}});
  j["standard_sequence"] = r.standard_sequence;
  j["standard_sequence_status"] = r.standard_sequence_status;
  j["standard_sequence_detail"] = r.standard_sequence_detail;
  j["standard_complex_x"] = ordered_json::array();
  for (const auto& e : r.standard_complex_x) j["standard_complex_x"].push_back({e.sign, {e.i, e.j}});
  j["standard_complex_x_status"] = r.standard_complex_x_status;
  j["standard_complex_x_detail"] = r.standard_complex_x_detail;
  j["phi"] = ordered_json::array();
  for (const auto& [k, v] : r.phi) j["phi"].push_back({k.first, v});
  j["phi_ij"] = ordered_json::array();
  for (const auto& [k, v] : r.phi_ij) j["phi_ij"].push_back({k.first, k.second, v});
  j["d_invariant"] = r.d_invariant.to_string();
  j["homology_rank"] = r.homology_rank;
  j["provenance"] = {{"cancellations", r.cancellations}, {"digest", r.provenance_digest}};
  return j;
}

std::string edge_text(const XEdge& e) {
  return std::string(e.sign < 0 ? "-" : "") + "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

template <class Seq, class F>
std::string bracketed(const Seq& seq, F item) {
  std::string s = "[";
  for (std::size_t k = 0; k < seq.size(); ++k) s += (k ? "," : "") + item(seq[k]);
  return s + "]";
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "knot: " << r.knot << '\n'
     << "cable_n: " << r.cable_n << '\n'
     << "surgery: " << r.surgery << '\n'
     << "window: [" << r.window.lo << "," << r.window.hi << "]\n"
     << "mirror: " << (r.mirror ? "true" : "false") << '\n'
     << "generators: cone " << r.generators_cone << ", reduced " << r.generators_reduced << '\n'
     << "reduced differential:\n";
  for (const auto& a : r.reduced_differential)
    os << "  " << a.source << " -> U^" << a.u_power << " " << a.target << "  drop (" << a.drop_i << ","
       << a.drop_j.to_string() << ")\n";
  auto status = [](const std::string& s, const std::string& d) { return d.empty() ? s : s + ": " + d; };
  os << "standard_sequence [" << status(r.standard_sequence_status, r.standard_sequence_detail)
     << "]: " << bracketed(r.standard_sequence, [](Int v) { return std::to_string(v); }) << '\n';
  os << "standard_complex_x [" << status(r.standard_complex_x_status, r.standard_complex_x_detail)
     << "]: " << bracketed(r.standard_complex_x, edge_text) << '\n';
  os << "phi:";
  for (const auto& [k, v] : r.phi) os << " phi_" << k.first << "=" << v;
  os << "\nphi_ij:";
  for (const auto& [k, v] : r.phi_ij) os << " phi_" << k.first << "," << k.second << "=" << v;
  os << "\nd_invariant: " << r.d_invariant.to_string() << '\n'
     << "homology_rank: " << r.homology_rank << '\n'
     << "provenance: " << r.cancellations << " cancellations, " << r.provenance_digest << '\n'
     << "cfk:\n";
  std::istringstream cfk(r.cfk);
  for (std::string line; std::getline(cfk, line);) os << "  " << line << '\n';
  return os.str();
}

}  // namespace

std::string serialize_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::Text) return to_text(r);
  return to_json(r).dump() + "\n";
}

Report parse_report_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    Report r;
    const auto& in = j.at("input");
    r.knot = in.at("knot").get<std::string>();
    r.cable_n = in.at("cable_n").get<Int>();
    r.surgery = in.at("surgery").get<std::string>();
    r.window = {in.at("window").at(0).get<Int>(), in.at("window").at(1).get<Int>()};
    r.mirror = in.at("mirror").get<bool>();
    r.cfk = in.at("cfk").get<std::string>();
    r.generators_cone = j.at("generators").at("cone").get<std::size_t>();
    r.generators_reduced = j.at("generators").at("reduced").get<std::size_t>();
    for (const auto& a : j.at("reduced_differential"))
      r.reduced_differential.push_back({a.at("source").get<std::string>(), a.at("target").get<std::string>(),
                                        a.at("u_power").get<Int>(), a.at("drop_i").get<Int>(),
                                        Rational::parse(a.at("drop_j").get<std::string>())});
    r.standard_sequence = j.at("standard_sequence").get<std::vector<Int>>();
    r.standard_sequence_status = j.at("standard_sequence_status").get<std::string>();
    r.standard_sequence_detail = j.at("standard_sequence_detail").get<std::string>();
    for (const auto& e : j.at("standard_complex_x"))
      r.standard_complex_x.push_back({e.at(0).get<int>(), e.at(1).at(0).get<Int>(), e.at(1).at(1).get<Int>()});
    r.standard_complex_x_status = j.at("standard_complex_x_status").get<std::string>();
    r.standard_complex_x_detail = j.at("standard_complex_x_detail").get<std::string>();
    for (const auto& e : j.at("phi")) r.phi[{e.at(0).get<Int>(), 0}] = e.at(1).get<Int>();
    for (const auto& e : j.at("phi_ij")) r.phi_ij[{e.at(0).get<Int>(), e.at(1).get<Int>()}] = e.at(2).get<Int>();
    r.d_invariant = Rational::parse(j.at("d_invariant").get<std::string>());
    r.homology_rank = j.at("homology_rank").get<Int>();
    r.cancellations = j.at("provenance").at("cancellations").get<std::size_t>();
    r.provenance_digest = j.at("provenance").at("digest").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace cablecone
