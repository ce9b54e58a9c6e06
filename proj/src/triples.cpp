#include "bdcoh/triples.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <tuple>

#include "bdcoh/errors.hpp"

namespace bdcoh {

namespace {

std::vector<int> as_vector(const std::set<int>& s) { return {s.begin(), s.end()}; }

std::vector<std::pair<int, int>> as_pairs(const std::map<int, int>& m) { return {m.begin(), m.end()}; }

int cartan(int a, int b) { return a == b ? 2 : (std::abs(a - b) == 1 ? -1 : 0); }

}  // namespace

AdmissibleTriple AdmissibleTriple::cremmer_gervais(int n) {
  AdmissibleTriple t = empty(n);
  for (int i = 1; i <= n - 2; ++i) {
    t.gamma1.insert(i);
    t.gamma2.insert(i + 1);
    t.tau[i] = i + 1;
  }
  return t;
}

bool triple_less(const AdmissibleTriple& a, const AdmissibleTriple& b) {
  return std::make_tuple(a.n, as_vector(a.gamma1), as_vector(a.gamma2), as_pairs(a.tau)) <
         std::make_tuple(b.n, as_vector(b.gamma1), as_vector(b.gamma2), as_pairs(b.tau));
}

TripleValidation validate_triple(const AdmissibleTriple& t) {
  if (t.n < 2) throw Error(ErrorKind::MalformedTriple, "n must be at least 2");
  auto in_range = [&](int i) { return i >= 1 && i <= t.n - 1; };
  for (const auto* set : {&t.gamma1, &t.gamma2})
    for (int i : *set)
      if (!in_range(i)) throw Error(ErrorKind::MalformedTriple, "simple root index " + std::to_string(i) + " outside 1.." + std::to_string(t.n - 1));
  for (const auto& [a, b] : t.tau)
    if (!in_range(a) || !in_range(b)) throw Error(ErrorKind::MalformedTriple, "tau pair " + std::to_string(a) + ">" + std::to_string(b) + " outside 1.." + std::to_string(t.n - 1));

  std::set<int> domain, image;
  for (const auto& [a, b] : t.tau) {
    domain.insert(a);
    image.insert(b);
  }
  if (domain != t.gamma1 || image != t.gamma2 || image.size() != t.tau.size()) {
    return {false, "bijection: tau is not a bijection from Gamma1 onto Gamma2"};
  }
  if (!t.gamma1.empty() && static_cast<int>(t.gamma1.size()) >= t.n - 1) {
    return {false, "size: Gamma1 must be a proper subset of the simple roots"};
  }
  for (const auto& [a, ta] : t.tau)
    for (const auto& [b, tb] : t.tau)
      if (cartan(a, b) != cartan(ta, tb)) {
        return {false, "isometry: A(" + std::to_string(a) + "," + std::to_string(b) + ") != A(tau " + std::to_string(a) + ",tau " + std::to_string(b) + ")"};
      }
  for (const auto& [a, ta] : t.tau) {
    int cur = a;
    for (size_t step = 0; step <= t.tau.size(); ++step) {
      auto it = t.tau.find(cur);
      if (it == t.tau.end()) break;
      cur = it->second;
      if (step == t.tau.size()) {
        return {false, "nilpotency: the tau-orbit of alpha_" + std::to_string(a) + " never leaves Gamma1"};
      }
    }
  }
  return {};
}

std::vector<AdmissibleTriple> enumerate_triples(int n, int bound) {
  if (n < 2) throw Error(ErrorKind::MalformedTriple, "n must be at least 2");
  if (n > bound) throw Error(ErrorKind::BoundExceeded, "n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(bound));
  const int roots = n - 1;
  std::vector<AdmissibleTriple> out;
  for (unsigned mask = 0; mask < (1u << roots); ++mask) {
    std::vector<int> g1;
    for (int i = 0; i < roots; ++i)
      if (mask & (1u << i)) g1.push_back(i + 1);
    if (!g1.empty() && static_cast<int>(g1.size()) >= roots) continue;

    std::vector<int> images(g1.size());
    std::vector<bool> used(roots + 1, false);
    std::function<void(size_t)> assign = [&](size_t pos) {
      if (pos == g1.size()) {
        AdmissibleTriple t = AdmissibleTriple::empty(n);
        for (size_t k = 0; k < g1.size(); ++k) {
          t.gamma1.insert(g1[k]);
          t.gamma2.insert(images[k]);
          t.tau[g1[k]] = images[k];
        }
        if (validate_triple(t).valid) out.push_back(std::move(t));
        return;
      }
      for (int img = 1; img <= roots; ++img) {
        if (used[img]) continue;
        // prune on isometry against already assigned roots
        bool ok = true;
        for (size_t k = 0; k < pos && ok; ++k) ok = cartan(g1[k], g1[pos]) == cartan(images[k], img);
        if (!ok) continue;
        used[img] = true;
        images[pos] = img;
        assign(pos + 1);
        used[img] = false;
      }
    };
    assign(0);
  }
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

int s_involution(int n, int i) {
  if (i < 1 || i > n - 1) throw Error(ErrorKind::MalformedTriple, "simple root index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  return n - i;
}

bool twistability_check(const AdmissibleTriple& t) {
  std::set<int> s_g1;
  for (int i : t.gamma1) s_g1.insert(s_involution(t.n, i));
  if (s_g1 != t.gamma2) return false;
  std::map<int, int> inv;
  for (const auto& [a, b] : t.tau) inv[b] = a;
  for (const auto& [a, b] : t.tau) {
    auto it = inv.find(s_involution(t.n, a));
    if (it == inv.end() || it->second != s_involution(t.n, b)) return false;
  }
  return true;
}

AdmissibleTriple mirror(const AdmissibleTriple& t) {
  AdmissibleTriple m = AdmissibleTriple::empty(t.n);
  for (const auto& [a, b] : t.tau) {
    m.gamma1.insert(s_involution(t.n, a));
    m.gamma2.insert(s_involution(t.n, b));
    m.tau[s_involution(t.n, a)] = s_involution(t.n, b);
  }
  return m;
}

StringDecomposition string_decomposition(const AdmissibleTriple& t) {
  StringDecomposition out;
  const bool even = t.n % 2 == 0;
  for (int start = 1; start <= t.n - 1; ++start) {
    if (t.gamma2.count(start)) continue;  // has a tau-preimage
    RootString str;
    int cur = start;
    str.roots.push_back(cur);
    for (auto it = t.tau.find(cur); it != t.tau.end(); it = t.tau.find(cur)) {
      cur = it->second;
      if (std::find(str.roots.begin(), str.roots.end(), cur) != str.roots.end()) {
        throw Error(ErrorKind::MalformedTriple, "tau has a cycle; triple is not nilpotent");
      }
      str.roots.push_back(cur);
    }
    std::set<int> members(str.roots.begin(), str.roots.end()), mirrored;
    for (int i : str.roots) mirrored.insert(s_involution(t.n, i));
    str.symmetric = members == mirrored;
    str.has_middlepoint = even && members.count(t.n / 2) > 0;
    if (str.symmetric && !str.has_middlepoint) ++out.str_count;
    out.strings.push_back(std::move(str));
  }
  return out;
}

std::string format_triple(const AdmissibleTriple& t) {
  auto join = [](const std::set<int>& s) {
    std::string out;
    for (int i : s) out += (out.empty() ? "" : ",") + std::to_string(i);
    return out;
  };
  std::string out = "n=" + std::to_string(t.n);
  if (!t.gamma1.empty()) out += ";g1=" + join(t.gamma1);
  if (!t.gamma2.empty()) out += ";g2=" + join(t.gamma2);
  if (!t.tau.empty()) {
    out += ";tau=";
    bool first = true;
    for (const auto& [a, b] : t.tau) {
      out += (first ? "" : ",") + std::to_string(a) + ">" + std::to_string(b);
      first = false;
    }
  }
  return out;
}

namespace {

class TripleParser {
 public:
  explicit TripleParser(const std::string& text) : s_(text) {}

  AdmissibleTriple parse() {
    AdmissibleTriple t;
    expect_key("n");
    t.n = integer();
    if (t.n < 2) fail("n must be at least 2", 3);
    std::string last = "n";
    const std::vector<std::string> order{"n", "g1", "g2", "tau"};
    while (pos_ < s_.size()) {
      expect(';');
      const size_t key_pos = pos_;
      std::string key = identifier();
      auto it = std::find(order.begin(), order.end(), key);
      auto prev = std::find(order.begin(), order.end(), last);
      if (it == order.end()) fail("unknown field '" + key + "'", key_pos);
      if (it <= prev) fail("field '" + key + "' out of order or repeated", key_pos);
      expect('=');
      if (key == "g1") t.gamma1 = int_set();
      else if (key == "g2") t.gamma2 = int_set();
      else {
        do {
          const size_t pair_pos = pos_;
          int a = integer();
          expect('>');
          int b = integer();
          if (!t.tau.emplace(a, b).second) fail("tau assigned twice for " + std::to_string(a), pair_pos);
        } while (accept(','));
      }
      last = key;
    }
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw Error(ErrorKind::ParseError, "column " + std::to_string(at + 1) + ": " + msg + " in '" + s_ + "'");
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", pos_);
  }
  void expect_key(const std::string& key) {
    const size_t at = pos_;
    if (identifier() != key) fail("expected '" + key + "'", at);
    expect('=');
  }
  std::string identifier() {
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  int integer() {
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer", start);
    if (pos_ - start > 6) fail("integer too large", start);
    return std::stoi(s_.substr(start, pos_ - start));
  }
  std::set<int> int_set() {
    std::set<int> out;
    do {
      const size_t at = pos_;
      if (!out.insert(integer()).second) fail("repeated index", at);
    } while (accept(','));
    return out;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

AdmissibleTriple parse_triple(const std::string& spec) {
  AdmissibleTriple t = TripleParser(spec).parse();
  TripleValidation v = validate_triple(t);
  if (!v.valid) throw Error(ErrorKind::MalformedTriple, v.diagnostic);
  return t;
}

}  // namespace bdcoh
