#include "incalg/preorder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace incalg {

namespace {

std::unordered_map<std::string, int> index_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<int>(i)).second)
      fail(ErrorKind::DuplicateElement, "duplicate element \"" + labels[i] + "\"");
  }
  return index;
}

void close_or_validate(std::vector<std::uint8_t>& leq, int n, bool auto_close) {
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i * n + i)] = 1;
  if (auto_close) {
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        if (!leq[static_cast<std::size_t>(i * n + k)]) continue;
        for (int j = 0; j < n; ++j)
          if (leq[static_cast<std::size_t>(k * n + j)]) leq[static_cast<std::size_t>(i * n + j)] = 1;
      }
    return;
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!leq[static_cast<std::size_t>(i * n + k)]) continue;
      for (int j = 0; j < n; ++j)
        if (leq[static_cast<std::size_t>(k * n + j)] && !leq[static_cast<std::size_t>(i * n + j)])
          fail(ErrorKind::NotTransitive, "relation is not transitive: " + std::to_string(i) +
                                             " <= " + std::to_string(k) + " <= " + std::to_string(j) +
                                             " but not " + std::to_string(i) + " <= " + std::to_string(j));
    }
}

}  // namespace

PreOrder::PreOrder(std::vector<std::string> labels, std::vector<std::uint8_t> leq)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)), leq_(std::move(leq)) {}

PreOrder PreOrder::build(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& relation,
                         bool auto_close) {
  auto index = index_labels(labels);
  const int n = static_cast<int>(labels.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : relation) {
    auto ia = index.find(a);
    if (ia == index.end()) fail(ErrorKind::UnknownElement, "unknown element \"" + a + "\" in relation");
    auto ib = index.find(b);
    if (ib == index.end()) fail(ErrorKind::UnknownElement, "unknown element \"" + b + "\" in relation");
    leq[static_cast<std::size_t>(ia->second * n + ib->second)] = 1;
  }
  close_or_validate(leq, n, auto_close);
  return PreOrder(std::move(labels), std::move(leq));
}

PreOrder PreOrder::from_leq(std::vector<std::string> labels, std::vector<std::vector<bool>> leq,
                            bool auto_close) {
  index_labels(labels);  // duplicate check
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(leq.size()) != n)
    fail(ErrorKind::ParseError, "relation table must have one row per element");
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(leq[static_cast<std::size_t>(i)].size()) != n)
      fail(ErrorKind::ParseError, "relation table row has wrong length");
    for (int j = 0; j < n; ++j)
      flat[static_cast<std::size_t>(i * n + j)] = leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? 1 : 0;
  }
  close_or_validate(flat, n, auto_close);
  return PreOrder(std::move(labels), std::move(flat));
}

int PreOrder::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  fail(ErrorKind::UnknownElement, "unknown element \"" + label + "\"");
}

std::vector<std::pair<int, int>> PreOrder::basis_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (leq(u, v)) pairs.emplace_back(u, v);
  return pairs;
}

std::vector<std::pair<int, int>> PreOrder::directed_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v && leq(u, v)) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<int, int>> PreOrder::comparability_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (comparable(u, v)) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::vector<int>> PreOrder::connected_components() const {
  std::vector<int> component(static_cast<std::size_t>(n_), -1);
  int count = 0;
  for (int start = 0; start < n_; ++start) {
    if (component[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<int> stack{start};
    component[static_cast<std::size_t>(start)] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n_; ++v)
        if (component[static_cast<std::size_t>(v)] == -1 && comparable(u, v)) {
          component[static_cast<std::size_t>(v)] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }
  std::vector<std::vector<int>> components(static_cast<std::size_t>(count));
  for (int v = 0; v < n_; ++v) components[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])].push_back(v);
  return components;
}

PreOrder PreOrder::induced(const std::vector<int>& subset) const {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (int idx : subset) {
    if (idx < 0 || idx >= n_) fail(ErrorKind::UnknownElement, "index out of range: " + std::to_string(idx));
    labels.push_back(labels_[static_cast<std::size_t>(idx)]);
  }
  const int m = static_cast<int>(subset.size());
  std::vector<std::uint8_t> sub(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sub[static_cast<std::size_t>(i * m + j)] = leq(subset[static_cast<std::size_t>(i)], subset[static_cast<std::size_t>(j)]) ? 1 : 0;
  return PreOrder(std::move(labels), std::move(sub));
}

bool PreOrder::same_as(const PreOrder& other) const {
  return labels_ == other.labels_ && leq_ == other.leq_;
}

PreOrderPtr build_preorder(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& relation,
                           bool auto_close) {
  return std::make_shared<const PreOrder>(PreOrder::build(std::move(labels), relation, auto_close));
}

namespace {
std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_dot_comparability(const PreOrder& order, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int i = 0; i < order.size(); ++i) os << "  " << quote(order.label(i)) << ";\n";
  for (auto [u, v] : order.comparability_edges())
    os << "  " << quote(order.label(u)) << " -- " << quote(order.label(v)) << ";\n";
  os << "}\n";
  return os.str();
}

std::uint64_t for_each_preorder(int n, const std::function<void(const PreOrder&)>& visit) {
  if (n < 1) fail(ErrorKind::ParseError, "need at least one element");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  const int m = static_cast<int>(cells.size());
  if (m >= 63) fail(ErrorKind::OracleBoundExceeded, "exhaustive enumeration is limited to small n");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(leq.begin(), leq.end(), 0);
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i * n + i)] = 1;
    for (int bit = 0; bit < m; ++bit)
      if (mask & (std::uint64_t{1} << bit))
        leq[static_cast<std::size_t>(cells[static_cast<std::size_t>(bit)].first * n +
                                     cells[static_cast<std::size_t>(bit)].second)] = 1;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int k = 0; k < n && transitive; ++k) {
        if (!leq[static_cast<std::size_t>(i * n + k)]) continue;
        for (int j = 0; j < n; ++j)
          if (leq[static_cast<std::size_t>(k * n + j)] && !leq[static_cast<std::size_t>(i * n + j)]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    ++count;
    std::vector<std::vector<bool>> table(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            leq[static_cast<std::size_t>(i * n + j)] != 0;
    visit(PreOrder::from_leq(labels, std::move(table), false));
  }
  return count;
}

std::string to_dot_directed(const PreOrder& order, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int i = 0; i < order.size(); ++i) os << "  " << quote(order.label(i)) << ";\n";
  for (auto [u, v] : order.directed_edges())
    os << "  " << quote(order.label(u)) << " -> " << quote(order.label(v)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace incalg
