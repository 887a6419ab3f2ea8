#ifndef ACRI_TOOLS_CLASSIFY_DEMO_HPP
#define ACRI_TOOLS_CLASSIFY_DEMO_HPP

#include <string>
#include <vector>

namespace acri::demo {

/// Trapezoidal membership on a real attribute axis; open shoulders use
/// infinities. Triangles are trapezoids with b == c.
struct LabelShape {
  std::string name;
  double a, b, c, d;

  double membership(double x) const;
};

struct AttributeConfig {
  double lo = 0.0, hi = 1.0;
  int points = 21;
  std::vector<LabelShape> labels;

  const LabelShape& label(const std::string& name) const;
  std::vector<double> axis() const;
  int nearest_index(double value) const;
};

struct DemoRule {
  std::string label1, label2, klass;
};

struct ClassifierConfig {
  AttributeConfig attribute1, attribute2;
  std::vector<DemoRule> rules;
  std::vector<std::string> classes;  // tie order, first wins
};

/// Built-in membership partition and rule base; identical to the shipped
/// data/classify_demo_config.json.
ClassifierConfig default_config();
ClassifierConfig load_config(const std::string& path);

struct Classification {
  std::string klass;
  std::vector<double> rule_firings;  // per rule, in rule-base order
  std::vector<double> class_scores;  // per config class
  bool tie = false;
};

/// Fuzzifies the reading to a singleton on the discretized product
/// universe, runs one sup-composition inference per rule with the
/// Lukasiewicz implication and t-norm, recovers each rule's firing
/// strength from the off-class conclusion level, and takes the class with
/// the best score. Throws std::invalid_argument for out-of-range readings.
Classification classify(const ClassifierConfig& config, double attr1,
                        double attr2);

}  // namespace acri::demo

#endif
