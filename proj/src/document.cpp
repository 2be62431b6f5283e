#include "catbase/document.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "json.hpp"
#include "json_format.hpp"

namespace catbase {

namespace {

using nlohmann::json;

// Minimal document tree that remembers the source line of every token.
struct Node {
  enum class Kind { Object, Array, String, Unsigned, Integer, Float, Bool, Null };
  Kind kind = Kind::Null;
  int line = 0;
  std::uint64_t unsigned_value = 0;
  std::int64_t integer_value = 0;
  std::string text;
  std::vector<std::pair<std::string, Node>> members;
  std::vector<int> key_lines;
  std::vector<Node> items;
};

// Line of every token that starts a SAX event ('{', '[', strings including
// keys, numbers, literals), in document order.
std::vector<int> token_lines(std::string_view text) {
  std::vector<int> lines;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '"') {
      lines.push_back(line);
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\') ++i;
        if (i < text.size() && text[i] == '\n') ++line;
        ++i;
      }
      ++i;
    } else if (c == '{' || c == '[') {
      lines.push_back(line);
      ++i;
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c)) != 0) {
      lines.push_back(line);
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) != 0 || text[i] == '-' ||
                                 text[i] == '+' || text[i] == '.' || text[i] == 'e' || text[i] == 'E')) {
        ++i;
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      lines.push_back(line);
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])) != 0) ++i;
    } else {
      ++i;
    }
  }
  return lines;
}

class TreeBuilder : public nlohmann::json_sax<json> {
 public:
  explicit TreeBuilder(std::vector<int> lines) : lines_(std::move(lines)) {}

  bool null() override { return scalar(Node::Kind::Null); }
  bool boolean(bool) override { return scalar(Node::Kind::Bool); }
  bool number_integer(number_integer_t v) override {
    Node& n = add(Node::Kind::Integer);
    n.integer_value = v;
    return true;
  }
  bool number_unsigned(number_unsigned_t v) override {
    Node& n = add(Node::Kind::Unsigned);
    n.unsigned_value = v;
    return true;
  }
  bool number_float(number_float_t, const string_t&) override { return scalar(Node::Kind::Float); }
  bool string(string_t& v) override {
    Node& n = add(Node::Kind::String);
    n.text = v;
    return true;
  }
  bool binary(binary_t&) override { return scalar(Node::Kind::Null); }
  bool start_object(std::size_t) override {
    stack_.push_back(&add(Node::Kind::Object));
    return true;
  }
  bool key(string_t& k) override {
    Node& obj = *stack_.back();
    const int line = next_line();
    for (std::size_t i = 0; i < obj.members.size(); ++i) {
      if (obj.members[i].first == k) {
        error_ = "duplicate key \"" + k + "\" at line " + std::to_string(line);
        return false;
      }
    }
    obj.members.emplace_back(k, Node{});
    obj.key_lines.push_back(line);
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    stack_.push_back(&add(Node::Kind::Array));
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
    error_ = std::string("malformed JSON: ") + ex.what();
    return false;
  }

  Node& root() { return root_; }
  const std::string& error() const { return error_; }

 private:
  int next_line() { return event_ < lines_.size() ? lines_[event_++] : 0; }

  bool scalar(Node::Kind kind) {
    add(kind);
    return true;
  }

  Node& add(Node::Kind kind) {
    const int line = next_line();
    Node* target = nullptr;
    if (stack_.empty()) {
      target = &root_;
    } else if (stack_.back()->kind == Node::Kind::Object) {
      target = &stack_.back()->members.back().second;
    } else {
      stack_.back()->items.emplace_back();
      target = &stack_.back()->items.back();
    }
    target->kind = kind;
    target->line = line;
    return *target;
  }

  std::vector<int> lines_;
  std::size_t event_ = 0;
  Node root_;
  std::vector<Node*> stack_;
  std::string error_;
};

Node parse_tree(std::string_view text) {
  TreeBuilder builder(token_lines(text));
  const bool ok = json::sax_parse(text.begin(), text.end(), &builder, json::input_format_t::json, true);
  if (!ok) throw InputError(builder.error().empty() ? "malformed JSON" : builder.error());
  return std::move(builder.root());
}

std::string at_line(int line) { return " (line " + std::to_string(line) + ")"; }

int parse_size(const Node& node) {
  if (node.kind != Node::Kind::Unsigned) throw InputError("\"n\" must be a positive integer" + at_line(node.line));
  if (node.unsigned_value < 1 || node.unsigned_value > static_cast<std::uint64_t>(kMaxPoints)) {
    throw InputError("\"n\" must be in [1, " + std::to_string(kMaxPoints) + "], got " +
                     std::to_string(node.unsigned_value) + at_line(node.line));
  }
  return static_cast<int>(node.unsigned_value);
}

PointSet subset_from(int n, const Node& node, const std::string& where) {
  if (node.kind != Node::Kind::Array) throw InputError(where + " must be an array of elements" + at_line(node.line));
  Mask bits = 0;
  std::int64_t previous = -1;
  for (std::size_t i = 0; i < node.items.size(); ++i) {
    const Node& e = node.items[i];
    const std::string label = "element at index " + std::to_string(i) + " of " + where;
    if (e.kind == Node::Kind::Integer) {
      throw InputError(label + " is negative (" + std::to_string(e.integer_value) + ")" + at_line(e.line));
    }
    if (e.kind != Node::Kind::Unsigned) throw InputError(label + " is not a non-negative integer" + at_line(e.line));
    if (e.unsigned_value >= static_cast<std::uint64_t>(n)) {
      throw InputError(label + " is " + std::to_string(e.unsigned_value) + ", which is >= n=" + std::to_string(n) +
                       at_line(e.line));
    }
    const auto x = static_cast<std::int64_t>(e.unsigned_value);
    if (x <= previous) throw InputError(label + " breaks strictly ascending order" + at_line(e.line));
    previous = x;
    bits |= Mask{1} << x;
  }
  return PointSet(n, bits);
}

std::vector<PointSet> subset_list(int n, const Node& node, const std::string& where) {
  if (node.kind != Node::Kind::Array) throw InputError("\"" + where + "\" must be an array" + at_line(node.line));
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < node.items.size(); ++i) {
    out.push_back(subset_from(n, node.items[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

OperatorTable operator_from(int n, const Node& node) {
  if (node.kind != Node::Kind::Object) throw InputError("\"operator\" must be an object" + at_line(node.line));
  const std::size_t count = std::size_t{1} << n;
  std::vector<Mask> table(count, 0);
  std::vector<bool> seen(count, false);
  for (std::size_t i = 0; i < node.members.size(); ++i) {
    const auto& [key, value] = node.members[i];
    const int line = node.key_lines[i];
    PointSet s;
    try {
      s = parse_set(n, key);
    } catch (const InputError& e) {
      throw InputError("operator key \"" + key + "\": " + e.what() + at_line(line));
    }
    if (seen[s.bits()]) throw InputError("operator key \"" + key + "\" repeats subset " + s.str() + at_line(line));
    seen[s.bits()] = true;
    table[s.bits()] = subset_from(n, value, "operator[" + key + "]").bits();
  }
  for (std::size_t s = 0; s < count; ++s) {
    if (!seen[s]) {
      throw InputError("operator is missing the subset " + PointSet(n, static_cast<Mask>(s)).str() +
                       at_line(node.line));
    }
  }
  return OperatorTable(n, std::move(table));
}

json set_json(const PointSet& s) { return json(s.elements()); }

}  // namespace

PointSet parse_set(int n, std::string_view text) {
  check_ground_size(n);
  Node node = parse_tree(text);
  return subset_from(n, node, "subset");
}

OperatorTable parse_operator(int n, std::string_view text) {
  check_ground_size(n);
  return operator_from(n, parse_tree(text));
}

InputDocument parse_input(std::string_view text) {
  Node root = parse_tree(text);
  if (root.kind != Node::Kind::Object) throw InputError("document must be a JSON object" + at_line(root.line));
  const Node* n_node = nullptr;
  const Node* regions = nullptr;
  const Node* op = nullptr;
  const Node* topology = nullptr;
  for (std::size_t i = 0; i < root.members.size(); ++i) {
    const auto& [key, value] = root.members[i];
    if (key == "n") {
      n_node = &value;
    } else if (key == "regions") {
      regions = &value;
    } else if (key == "operator") {
      op = &value;
    } else if (key == "topology") {
      topology = &value;
    } else {
      throw InputError("unknown field \"" + key + "\"" + at_line(root.key_lines[i]));
    }
  }
  if (n_node == nullptr) throw InputError("missing field \"n\"");
  if (regions == nullptr) throw InputError("missing field \"regions\"");

  InputDocument doc;
  doc.n = parse_size(*n_node);
  doc.regions = subset_list(doc.n, *regions, "regions");
  if (op != nullptr) doc.op = operator_from(doc.n, *op);
  if (topology != nullptr) doc.topology = subset_list(doc.n, *topology, "topology");
  return doc;
}

std::string serialize(const InputDocument& doc) {
  json out = json::object();
  out["n"] = doc.n;
  json regions = json::array();
  for (const auto& r : doc.regions) regions.push_back(set_json(r));
  out["regions"] = std::move(regions);
  if (doc.op) {
    json table = json::object();
    for (const auto s : power_set_iter(doc.n)) table[s.str()] = set_json((*doc.op)(s));
    out["operator"] = std::move(table);
  }
  if (doc.topology) {
    json opens = json::array();
    for (const auto& u : *doc.topology) opens.push_back(set_json(u));
    out["topology"] = std::move(opens);
  }
  return detail::pretty_json(out);
}

}  // namespace catbase
