#include "bltk/formula.hpp"

#include <algorithm>

namespace bltk {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> kids;
};

namespace {

bool is_binary_kind(Formula::Kind k) {
  using K = Formula::Kind;
  return k == K::Conj || k == K::Impl || k == K::Meet || k == K::Join || k == K::Iff;
}

}  // namespace

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}
Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}}));
  return f;
}
Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::Top, {}, {}}));
  return f;
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Conj, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::impl(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Impl, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::neg(Formula a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Neg, {}, {std::move(a)}}));
}
Formula Formula::meet(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Meet, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::join(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Join, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::iff(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Iff, {}, {std::move(a), std::move(b)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
bool Formula::is_binary() const { return is_binary_kind(node_->kind); }

bool Formula::is_core() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::Bottom: return true;
    case Kind::Conj:
    case Kind::Impl: return lhs().is_core() && rhs().is_core();
    default: return false;
  }
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& k : node_->kids) n += k.size();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name && a.node_->kids == b.node_->kids;
}

Formula desugar(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Bottom: return f;
    case K::Top: return Formula::impl(Formula::bottom(), Formula::bottom());
    case K::Neg: return Formula::impl(desugar(f.lhs()), Formula::bottom());
    default: break;
  }
  const Formula a = desugar(f.lhs());
  const Formula b = desugar(f.rhs());
  auto meet = [](const Formula& x, const Formula& y) { return Formula::conj(x, Formula::impl(x, y)); };
  switch (f.kind()) {
    case K::Conj: return Formula::conj(a, b);
    case K::Impl: return Formula::impl(a, b);
    case K::Meet: return meet(a, b);
    case K::Join:
      return meet(Formula::impl(Formula::impl(a, b), b), Formula::impl(Formula::impl(b, a), a));
    case K::Iff: return Formula::conj(Formula::impl(a, b), Formula::impl(b, a));
    default: return f;
  }
}

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
    return;
  }
  if (f.kind() == Formula::Kind::Neg) {
    collect_atoms(f.lhs(), out);
  } else if (f.is_binary()) {
    collect_atoms(f.lhs(), out);
    collect_atoms(f.rhs(), out);
  }
}

/// Binding tier: 0 arrows, 1 lattice, 2 conjunction, 3 prefix and primaries.
int tier(Formula::Kind k) {
  using K = Formula::Kind;
  switch (k) {
    case K::Impl:
    case K::Iff: return 0;
    case K::Meet:
    case K::Join: return 1;
    case K::Conj: return 2;
    default: return 3;
  }
}

const char* symbol(Formula::Kind k) {
  using K = Formula::Kind;
  switch (k) {
    case K::Conj: return " & ";
    case K::Impl: return " -> ";
    case K::Meet: return " ^ ";
    case K::Join: return " | ";
    case K::Iff: return " <-> ";
    default: return "";
  }
}

void print(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(f, out);
  if (wrap) out += ')';
}

void print(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: out += f.name(); return;
    case K::Bottom: out += '0'; return;
    case K::Top: out += '1'; return;
    case K::Neg:
      out += '!';
      print_wrapped(f.lhs(), f.lhs().is_binary(), out);
      return;
    default: break;
  }
  const int t = tier(f.kind());
  const Formula& l = f.lhs();
  const Formula& r = f.rhs();
  bool wrap_l = false, wrap_r = false;
  if (t == 0) {
    // '->' associates to the right and '<->' does not associate.
    wrap_l = tier(l.kind()) == 0;
    wrap_r = f.kind() == K::Iff ? tier(r.kind()) == 0 : r.kind() == K::Iff;
  } else {
    wrap_l = tier(l.kind()) < t;
    wrap_r = tier(r.kind()) <= t;
  }
  print_wrapped(l, wrap_l, out);
  out += symbol(f.kind());
  print_wrapped(r, wrap_r, out);
}

}  // namespace

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace bltk
