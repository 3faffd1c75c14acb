#include "griesmer/json.hpp"

#include <string>

namespace griesmer {

Json to_json(const BoundReport& r) {
  Json j;
  j["q"] = r.q;
  j["k"] = r.k;
  j["d"] = r.d;
  j["griesmer"] = r.griesmer;
  j["singleton"] = r.singleton;
  j["terms"] = r.terms;
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.q = j.at("q").get<std::int64_t>();
  r.k = j.at("k").get<std::int64_t>();
  r.d = j.at("d").get<std::int64_t>();
  r.griesmer = j.at("griesmer").get<std::int64_t>();
  r.singleton = j.at("singleton").get<std::int64_t>();
  r.terms = j.at("terms").get<std::vector<std::int64_t>>();
  return r;
}

Json to_json(const SearchOutcome& o) {
  Json j;
  j["feasible"] = o.feasible;
  j["exhausted"] = o.exhausted;
  j["nodes_explored"] = o.nodes_explored;
  if (o.witness) {
    Json words = Json::array();
    for (const Word& w : *o.witness) words.push_back(w.str());
    j["witness"] = std::move(words);
  }
  return j;
}

SearchOutcome search_outcome_from_json(const Json& j, int q) {
  SearchOutcome o;
  o.feasible = j.at("feasible").get<bool>();
  o.exhausted = j.at("exhausted").get<bool>();
  o.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
  if (auto it = j.find("witness"); it != j.end()) {
    std::vector<Word> words;
    for (const auto& s : *it) words.push_back(parse_word(s.get<std::string>(), q));
    o.witness = Code(std::move(words));
  }
  return o;
}

Json to_json(const Verdict& v) {
  Json j;
  j["id"] = std::string(to_string(v.theorem.id));
  j["q"] = v.theorem.q;
  j["k"] = v.theorem.k;
  j["d"] = v.theorem.d;
  j["griesmer"] = v.griesmer;
  j["critical_n"] = v.theorem.critical_n();
  j["confirmed"] = v.confirmed;
  j["nodes_explored"] = v.outcome.nodes_explored;
  return j;
}

}  // namespace griesmer
