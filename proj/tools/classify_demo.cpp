#include "classify_demo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "acri/engine.hpp"

namespace acri::demo {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
using nlohmann::json;
}  // namespace

double LabelShape::membership(double x) const {
  double up = 1.0, down = 1.0;
  if (std::isfinite(b) && x < b)
    up = std::isfinite(a) && b > a ? (x - a) / (b - a) : 1.0;
  if (std::isfinite(c) && x > c)
    down = std::isfinite(d) && d > c ? (d - x) / (d - c) : 1.0;
  return std::clamp(std::min(up, down), 0.0, 1.0);
}

const LabelShape& AttributeConfig::label(const std::string& name) const {
  for (const auto& l : labels)
    if (l.name == name) return l;
  throw std::invalid_argument("classify-demo: unknown linguistic label '" +
                              name + "'");
}

std::vector<double> AttributeConfig::axis() const {
  std::vector<double> out(points);
  for (int k = 0; k < points; ++k)
    out[k] = lo + (hi - lo) * k / (points - 1);
  return out;
}

int AttributeConfig::nearest_index(double value) const {
  const double step = (hi - lo) / (points - 1);
  const long k = std::lround((value - lo) / step);
  return static_cast<int>(std::clamp<long>(k, 0, points - 1));
}

namespace {

const char* kDefaultConfig = R"({
  "attribute1": {
    "range": [0, 30],
    "points": 21,
    "labels": {
      "low":    {"trapezoid": [null, null, 5, 12]},
      "medium": {"triangle":  [5, 12, 19]},
      "high":   {"trapezoid": [12, 19, null, null]}
    }
  },
  "attribute2": {
    "range": [0, 10],
    "points": 21,
    "labels": {
      "low":  {"trapezoid": [null, null, 3, 6]},
      "high": {"trapezoid": [3, 6, null, null]}
    }
  },
  "rules": [
    {"attribute1": "high",   "attribute2": "high", "class": "Y"},
    {"attribute1": "medium", "attribute2": "high", "class": "Y"},
    {"attribute1": "low",    "attribute2": "high", "class": "M"},
    {"attribute1": "high",   "attribute2": "low",  "class": "M"},
    {"attribute1": "medium", "attribute2": "low",  "class": "N"},
    {"attribute1": "low",    "attribute2": "low",  "class": "N"}
  ],
  "classes": ["Y", "M", "N"]
})";

double edge(const json& j, double open_value) {
  return j.is_null() ? open_value : j.get<double>();
}

AttributeConfig parse_attribute(const json& j, const char* what) {
  AttributeConfig cfg;
  cfg.lo = j.at("range").at(0).get<double>();
  cfg.hi = j.at("range").at(1).get<double>();
  cfg.points = j.value("points", 21);
  if (!(cfg.hi > cfg.lo) || cfg.points < 2)
    throw std::invalid_argument(std::string("classify-demo config: bad ") +
                                what);
  for (const auto& [name, shape] : j.at("labels").items()) {
    LabelShape l{name, -kInf, -kInf, kInf, kInf};
    if (shape.contains("trapezoid")) {
      const auto& t = shape.at("trapezoid");
      l.a = edge(t.at(0), -kInf);
      l.b = edge(t.at(1), -kInf);
      l.c = edge(t.at(2), kInf);
      l.d = edge(t.at(3), kInf);
    } else if (shape.contains("triangle")) {
      const auto& t = shape.at("triangle");
      l.a = t.at(0).get<double>();
      l.b = t.at(1).get<double>();
      l.c = l.b;
      l.d = t.at(2).get<double>();
    } else {
      throw std::invalid_argument(
          "classify-demo config: label needs a trapezoid or triangle");
    }
    cfg.labels.push_back(std::move(l));
  }
  return cfg;
}

ClassifierConfig parse_config(const json& doc) {
  ClassifierConfig cfg;
  cfg.attribute1 = parse_attribute(doc.at("attribute1"), "attribute1");
  cfg.attribute2 = parse_attribute(doc.at("attribute2"), "attribute2");
  for (const auto& r : doc.at("rules"))
    cfg.rules.push_back({r.at("attribute1").get<std::string>(),
                         r.at("attribute2").get<std::string>(),
                         r.at("class").get<std::string>()});
  for (const auto& c : doc.at("classes"))
    cfg.classes.push_back(c.get<std::string>());
  if (cfg.rules.empty() || cfg.classes.empty())
    throw std::invalid_argument("classify-demo config: needs rules and classes");
  return cfg;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

FuzzySet sampled(const AttributeConfig& attr, const LabelShape& shape) {
  std::vector<std::string> labels;
  std::vector<double> values;
  for (const double x : attr.axis()) {
    labels.push_back(format_number(x));
    values.push_back(shape.membership(x));
  }
  return FuzzySet(std::move(labels), std::move(values));
}

FuzzySet singleton(const AttributeConfig& attr, double value) {
  std::vector<std::string> labels;
  std::vector<double> values;
  const int hit = attr.nearest_index(value);
  int k = 0;
  for (const double x : attr.axis()) {
    labels.push_back(format_number(x));
    values.push_back(k++ == hit ? 1.0 : 0.0);
  }
  return FuzzySet(std::move(labels), std::move(values));
}

}  // namespace

ClassifierConfig default_config() {
  return parse_config(json::parse(kDefaultConfig));
}

ClassifierConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("classify-demo: cannot open config " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("classify-demo config: ") +
                                e.what());
  }
  return parse_config(doc);
}

Classification classify(const ClassifierConfig& config, double attr1,
                        double attr2) {
  const auto& a1 = config.attribute1;
  const auto& a2 = config.attribute2;
  if (!(attr1 >= a1.lo && attr1 <= a1.hi))
    throw std::invalid_argument("attribute 1 reading " +
                                format_number(attr1) + " outside [" +
                                format_number(a1.lo) + "," +
                                format_number(a1.hi) + "]");
  if (!(attr2 >= a2.lo && attr2 <= a2.hi))
    throw std::invalid_argument("attribute 2 reading " +
                                format_number(attr2) + " outside [" +
                                format_number(a2.lo) + "," +
                                format_number(a2.hi) + "]");

  const FuzzySet input = product_set(singleton(a1, attr1), singleton(a2, attr2));
  const auto tlk = Aggregator::lukasiewicz_tnorm();
  const auto ilk = Implication::lukasiewicz();

  Classification out;
  out.class_scores.assign(config.classes.size(), 0.0);
  for (const auto& rule_cfg : config.rules) {
    const FuzzySet antecedent = product_set(sampled(a1, a1.label(rule_cfg.label1)),
                                            sampled(a2, a2.label(rule_cfg.label2)));
    std::vector<double> crisp(config.classes.size(), 0.0);
    for (std::size_t k = 0; k < config.classes.size(); ++k)
      if (config.classes[k] == rule_cfg.klass) crisp[k] = 1.0;
    const Rule rule{antecedent, FuzzySet(config.classes, crisp)};

    const FuzzySet conclusion = fmp_infer(tlk, ilk, rule, input);
    // With the Lukasiewicz implication and a crisp consequent, the
    // off-class conclusion level is exactly the complement of the
    // antecedent match, so the firing strength is recoverable.
    double off = 1.0;
    for (std::size_t k = 0; k < conclusion.size(); ++k)
      off = std::min(off, conclusion[k]);
    const double firing = 1.0 - off;
    out.rule_firings.push_back(firing);

    for (std::size_t k = 0; k < config.classes.size(); ++k)
      if (config.classes[k] == rule_cfg.klass)
        out.class_scores[k] = std::max(out.class_scores[k], firing);
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < out.class_scores.size(); ++k)
    if (out.class_scores[k] > out.class_scores[best]) best = k;
  for (std::size_t k = 0; k < out.class_scores.size(); ++k)
    out.tie |= k != best && out.class_scores[k] == out.class_scores[best];
  out.klass = config.classes[best];
  return out;
}

}  // namespace acri::demo
