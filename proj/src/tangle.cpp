#include "tanglerep/tangle.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace tanglerep {

static TanglePtr make_node(TangleExpr e) {
  return std::make_shared<const TangleExpr>(std::move(e));
}

TanglePtr t_gen(GenKind g) {
  TangleExpr e;
  e.kind = TangleKind::Gen;
  e.gen = g;
  switch (g) {
    case GenKind::Id: e.src = 1; e.dst = 1; break;
    case GenKind::Cross:
    case GenKind::CrossInv: e.src = 2; e.dst = 2; break;
    case GenKind::Cup: e.src = 0; e.dst = 2; break;
    case GenKind::Cap: e.src = 2; e.dst = 0; break;
    case GenKind::Id0: e.src = 0; e.dst = 0; break;
  }
  return make_node(std::move(e));
}

TanglePtr t_id0() { return t_gen(GenKind::Id0); }

TanglePtr t_compose(const TanglePtr& a, const TanglePtr& b) {
  if (a->dst != b->src)
    throw usage_error("cannot compose: upper diagram ends with " +
                      std::to_string(a->dst) + " strands, lower starts with " +
                      std::to_string(b->src));
  TangleExpr e;
  e.kind = TangleKind::Compose;
  e.a = a;
  e.b = b;
  e.src = a->src;
  e.dst = b->dst;
  return make_node(std::move(e));
}

TanglePtr t_tensor(const TanglePtr& a, const TanglePtr& b) {
  TangleExpr e;
  e.kind = TangleKind::Tensor;
  e.a = a;
  e.b = b;
  e.src = a->src + b->src;
  e.dst = a->dst + b->dst;
  return make_node(std::move(e));
}

TanglePtr t_scale(Scalar c, const TanglePtr& sub) {
  if (!c.valid()) throw usage_error("scale coefficient is not a scalar");
  TangleExpr e;
  e.kind = TangleKind::Scale;
  e.coeff = std::move(c);
  e.sub = sub;
  e.src = sub->src;
  e.dst = sub->dst;
  return make_node(std::move(e));
}

TanglePtr t_sum(std::vector<TanglePtr> parts) {
  if (parts.empty()) throw usage_error("sum of no diagrams");
  for (const TanglePtr& p : parts)
    if (p->src != parts[0]->src || p->dst != parts[0]->dst)
      throw usage_error("summands must share arities: " + std::to_string(parts[0]->src) +
                        "->" + std::to_string(parts[0]->dst) + " vs " +
                        std::to_string(p->src) + "->" + std::to_string(p->dst));
  if (parts.size() == 1) return parts[0];
  TangleExpr e;
  e.kind = TangleKind::Sum;
  e.src = parts[0]->src;
  e.dst = parts[0]->dst;
  e.summands = std::move(parts);
  return make_node(std::move(e));
}

TanglePtr t_id_pow(long n) {
  if (n < 0) throw usage_error("tensor power must be >= 0");
  if (n == 0) return t_id0();
  TanglePtr e = t_gen(GenKind::Id);
  for (long k = 1; k < n; ++k) e = t_tensor(e, t_gen(GenKind::Id));
  return e;
}

bool t_equal(const TanglePtr& x, const TanglePtr& y) {
  if (x.get() == y.get()) return true;
  if (x->kind != y->kind || x->src != y->src || x->dst != y->dst) return false;
  switch (x->kind) {
    case TangleKind::Gen:
      return x->gen == y->gen;
    case TangleKind::Compose:
    case TangleKind::Tensor:
      return t_equal(x->a, y->a) && t_equal(x->b, y->b);
    case TangleKind::Scale:
      return x->coeff == y->coeff && t_equal(x->sub, y->sub);
    case TangleKind::Sum: {
      if (x->summands.size() != y->summands.size()) return false;
      for (size_t k = 0; k < x->summands.size(); ++k)
        if (!t_equal(x->summands[k], y->summands[k])) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Structural constructors

TanglePtr cap_cup_chain(long n, ChainKind kind) {
  if (n < 1) throw usage_error("chain size must be >= 1");
  auto layer = [](long k, GenKind g) {
    TanglePtr mid = t_gen(g);
    if (k == 0) return mid;
    return t_tensor(t_tensor(t_id_pow(k), mid), t_id_pow(k));
  };
  if (kind == ChainKind::CapChain) {
    // (I^(n-1) x Cap x I^(n-1)) ; ... ; (I x Cap x I) ; Cap, arity 2n -> 0.
    TanglePtr e = layer(n - 1, GenKind::Cap);
    for (long k = n - 2; k >= 0; --k) e = t_compose(e, layer(k, GenKind::Cap));
    return e;
  }
  // Cup ; (I x Cup x I) ; ... ; (I^(n-1) x Cup x I^(n-1)), arity 0 -> 2n.
  TanglePtr e = layer(0, GenKind::Cup);
  for (long k = 1; k <= n - 1; ++k) e = t_compose(e, layer(k, GenKind::Cup));
  return e;
}

TanglePtr dual(const TanglePtr& d) {
  long s = d->src, t = d->dst;
  TanglePtr cup_s = (s == 0) ? t_id0() : cap_cup_chain(s, ChainKind::CupChain);
  TanglePtr cap_t = (t == 0) ? t_id0() : cap_cup_chain(t, ChainKind::CapChain);
  TanglePtr top = t_tensor(t_id_pow(t), cup_s);                    // t -> t+2s
  TanglePtr mid = t_tensor(t_tensor(t_id_pow(t), d), t_id_pow(s)); // t+2s -> 2t+s
  TanglePtr bot = t_tensor(cap_t, t_id_pow(s));                    // 2t+s -> s
  return t_compose(t_compose(top, mid), bot);
}

TanglePtr bmw_word(long n, const std::vector<BmwLetter>& word) {
  if (n < 1) throw usage_error("strand count must be >= 1");
  TanglePtr acc;
  for (const BmwLetter& l : word) {
    if (l.i < 1 || l.i > n - 1)
      throw usage_error("letter index " + std::to_string(l.i) +
                        " out of range on " + std::to_string(n) + " strands");
    TanglePtr block;
    switch (l.kind) {
      case BmwLetter::T: block = t_gen(GenKind::Cross); break;
      case BmwLetter::Tinv: block = t_gen(GenKind::CrossInv); break;
      case BmwLetter::E: block = t_compose(t_gen(GenKind::Cap), t_gen(GenKind::Cup)); break;
    }
    TanglePtr placed = block;
    if (l.i - 1 > 0) placed = t_tensor(t_id_pow(l.i - 1), placed);
    if (n - 1 - l.i > 0) placed = t_tensor(placed, t_id_pow(n - 1 - l.i));
    acc = acc ? t_compose(acc, placed) : placed;
  }
  return acc ? acc : t_id_pow(n);
}

// ---------------------------------------------------------------------------
// Printer

static int node_level(const TangleExpr& e) {
  switch (e.kind) {
    case TangleKind::Sum: return 0;
    case TangleKind::Compose: return 1;
    case TangleKind::Tensor: return 2;
    default: return 3;
  }
}

static void print_rec(const TanglePtr& e, std::string& out);

static void print_child(const TanglePtr& c, int min_level, std::string& out) {
  if (node_level(*c) < min_level) {
    out += '(';
    print_rec(c, out);
    out += ')';
  } else {
    print_rec(c, out);
  }
}

static void print_rec(const TanglePtr& e, std::string& out) {
  switch (e->kind) {
    case TangleKind::Gen:
      switch (e->gen) {
        case GenKind::Id: out += 'I'; return;
        case GenKind::Cross: out += 'X'; return;
        case GenKind::CrossInv: out += "Xi"; return;
        case GenKind::Cup: out += 'A'; return;
        case GenKind::Cap: out += 'U'; return;
        case GenKind::Id0: out += "I^0"; return;
      }
      return;
    case TangleKind::Scale:
      out += e->coeff.str();
      out += '.';
      print_child(e->sub, 3, out);
      return;
    case TangleKind::Tensor:
      print_child(e->a, 2, out);
      out += " * ";
      print_child(e->b, 3, out); // right-nested tensor needs parens
      return;
    case TangleKind::Compose:
      print_child(e->a, 1, out);
      out += " ; ";
      print_child(e->b, 2, out); // right-nested composition needs parens
      return;
    case TangleKind::Sum:
      for (size_t k = 0; k < e->summands.size(); ++k) {
        if (k) out += " + ";
        print_child(e->summands[k], 1, out); // nested sums need parens
      }
      return;
  }
}

std::string print_tangle(const TanglePtr& e) {
  std::string out;
  print_rec(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum TTokKind {
  TT_IDENT, TT_INT, TT_SEMI, TT_STAR, TT_CARET, TT_DOT,
  TT_PLUS, TT_MINUS, TT_SLASH, TT_LP, TT_RP, TT_END,
};

struct TTok {
  TTokKind k;
  std::string text;
  size_t pos;
};

std::vector<TTok> lex_tangle(std::string_view s) {
  std::vector<TTok> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({TT_IDENT, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({TT_INT, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    TTokKind k;
    switch (c) {
      case ';': k = TT_SEMI; break;
      case '*': k = TT_STAR; break;
      case '^': k = TT_CARET; break;
      case '.': k = TT_DOT; break;
      case '+': k = TT_PLUS; break;
      case '-': k = TT_MINUS; break;
      case '/': k = TT_SLASH; break;
      case '(': k = TT_LP; break;
      case ')': k = TT_RP; break;
      default:
        throw usage_error("unexpected character '" + std::string(1, c) +
                          "' at position " + std::to_string(i));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({TT_END, "", s.size()});
  return out;
}

// A factor may start with a scalar literal terminated by '.'; detect it by
// scanning ahead for a dot at parenthesis depth zero across scalar-only
// tokens ('q', integers, operators, parentheses).
std::optional<size_t> scan_scalar_literal(const std::vector<TTok>& ts, size_t i) {
  int depth = 0;
  for (size_t j = i; ts[j].k != TT_END; ++j) {
    switch (ts[j].k) {
      case TT_LP: ++depth; break;
      case TT_RP:
        if (--depth < 0) return std::nullopt;
        break;
      case TT_DOT:
        if (depth == 0) return (j > i) ? std::optional<size_t>(j) : std::nullopt;
        break;
      case TT_INT:
      case TT_CARET:
      case TT_PLUS:
      case TT_MINUS:
      case TT_STAR:
      case TT_SLASH:
        break;
      case TT_IDENT:
        if (ts[j].text != "q") return std::nullopt;
        break;
      default:
        return std::nullopt;
    }
  }
  return std::nullopt;
}

struct TParser {
  const Field& f;
  const std::vector<TTok>& ts;
  std::string_view text;
  size_t i = 0;

  const TTok& peek() const { return ts[i]; }
  TTok next() { return ts[i++]; }

  [[noreturn]] void fail(const std::string& what, size_t pos) const {
    throw usage_error(what + " at position " + std::to_string(pos));
  }

  TanglePtr expr() {
    TanglePtr first = seq();
    if (peek().k != TT_PLUS && peek().k != TT_MINUS) return first;
    std::vector<TanglePtr> parts{first};
    Scalar minus_one = -sc_one(f);
    while (peek().k == TT_PLUS || peek().k == TT_MINUS) {
      TTok op = next();
      TanglePtr t = seq();
      if (t->src != parts[0]->src || t->dst != parts[0]->dst)
        fail("arity mismatch in sum: " + std::to_string(parts[0]->src) + "->" +
                 std::to_string(parts[0]->dst) + " vs " + std::to_string(t->src) +
                 "->" + std::to_string(t->dst),
             op.pos);
      parts.push_back(op.k == TT_PLUS ? t : t_scale(minus_one, t));
    }
    return t_sum(std::move(parts));
  }

  TanglePtr seq() {
    TanglePtr v = term();
    while (peek().k == TT_SEMI) {
      TTok op = next();
      TanglePtr w = term();
      if (v->dst != w->src)
        fail("arity mismatch: " + std::to_string(v->dst) + " does not match " +
                 std::to_string(w->src),
             op.pos);
      v = t_compose(v, w);
    }
    return v;
  }

  TanglePtr term() {
    TanglePtr v = factor();
    while (peek().k == TT_STAR) {
      next();
      v = t_tensor(v, factor());
    }
    return v;
  }

  long tensor_power() {
    if (peek().k == TT_MINUS) fail("tensor power must be >= 0", peek().pos);
    if (peek().k != TT_INT) fail("expected an integer tensor power", peek().pos);
    TTok t = next();
    if (t.text.size() > 4) fail("tensor power out of range", t.pos);
    return std::stol(t.text);
  }

  TanglePtr factor() {
    const TTok& tok = peek();
    if (tok.k == TT_IDENT && tok.text != "q") {
      GenKind g;
      if (tok.text == "I") g = GenKind::Id;
      else if (tok.text == "X") g = GenKind::Cross;
      else if (tok.text == "Xi") g = GenKind::CrossInv;
      else if (tok.text == "A") g = GenKind::Cup;
      else if (tok.text == "U") g = GenKind::Cap;
      else fail("unknown generator '" + tok.text + "'", tok.pos);
      next();
      if (peek().k == TT_CARET) {
        next();
        long n = tensor_power();
        if (n == 0) return t_id0();
        TanglePtr e = t_gen(g);
        for (long k = 1; k < n; ++k) e = t_tensor(e, t_gen(g));
        return e;
      }
      return t_gen(g);
    }
    if (auto dot = scan_scalar_literal(ts, i)) {
      size_t from = ts[i].pos, to = ts[*dot].pos;
      Scalar c;
      try {
        c = parse_scalar(f, text.substr(from, to - from));
      } catch (const usage_error& err) {
        throw usage_error(std::string(err.what()) + " (inside scalar literal starting at position " +
                          std::to_string(from) + ")");
      }
      i = *dot + 1;
      return t_scale(std::move(c), factor());
    }
    if (tok.k == TT_LP) {
      size_t open = next().pos;
      TanglePtr v = expr();
      if (peek().k != TT_RP) fail("unbalanced '(' opened", open);
      next();
      return v;
    }
    fail("expected a tangle factor", tok.pos);
  }
};

} // namespace

TanglePtr parse_tangle(const Field& f, std::string_view text) {
  std::vector<TTok> ts = lex_tangle(text);
  TParser p{f, ts, text};
  TanglePtr v = p.expr();
  if (p.peek().k != TT_END)
    throw usage_error("unexpected trailing input at position " +
                      std::to_string(p.peek().pos));
  return v;
}

// ---------------------------------------------------------------------------
// Random well-typed expressions for property tests

namespace {

Scalar random_coeff(std::mt19937& rng, const Field& f) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> expo(-2, 2);
  return sc_int(f, val(rng)) * sc_q(f, expo(rng));
}

// Any arity pair with even total has a cap/cup staircase realizing it.
TanglePtr base_diagram(long s, long t) {
  if (s == t) return t_id_pow(s);
  if (s > t) {
    TanglePtr caps = cap_cup_chain((s - t) / 2, ChainKind::CapChain);
    return (t == 0) ? caps : t_tensor(t_id_pow(t), caps);
  }
  TanglePtr cups = cap_cup_chain((t - s) / 2, ChainKind::CupChain);
  return (s == 0) ? cups : t_tensor(t_id_pow(s), cups);
}

} // namespace

TanglePtr random_tangle(std::mt19937& rng, const Field& f, long src, long dst,
                        int depth) {
  if ((src + dst) % 2 != 0)
    throw usage_error("src + dst must be even; no diagram connects " +
                      std::to_string(src) + " to " + std::to_string(dst));
  if (src < 0 || dst < 0) throw usage_error("arities must be >= 0");
  std::uniform_int_distribution<int> kind(0, 5);
  if (depth <= 0) {
    if (src == 2 && dst == 2) {
      switch (kind(rng) % 3) {
        case 0: return t_gen(GenKind::Cross);
        case 1: return t_gen(GenKind::CrossInv);
        default: return base_diagram(2, 2);
      }
    }
    return base_diagram(src, dst);
  }
  switch (kind(rng)) {
    case 0: { // compose through a random middle arity of matching parity
      std::uniform_int_distribution<long> midd(0, 2);
      long mid = src % 2 + 2 * midd(rng);
      return t_compose(random_tangle(rng, f, src, mid, depth - 1),
                       random_tangle(rng, f, mid, dst, depth - 1));
    }
    case 1: { // tensor split with even-total halves
      std::vector<std::pair<long, long>> splits;
      for (long s1 = 0; s1 <= src; ++s1)
        for (long t1 = 0; t1 <= dst; ++t1)
          if ((s1 + t1) % 2 == 0) splits.emplace_back(s1, t1);
      std::uniform_int_distribution<size_t> pick(0, splits.size() - 1);
      auto [s1, t1] = splits[pick(rng)];
      return t_tensor(random_tangle(rng, f, s1, t1, depth - 1),
                      random_tangle(rng, f, src - s1, dst - t1, depth - 1));
    }
    case 2:
      return t_scale(random_coeff(rng, f), random_tangle(rng, f, src, dst, depth - 1));
    case 3: {
      std::vector<TanglePtr> parts;
      parts.push_back(random_tangle(rng, f, src, dst, depth - 1));
      parts.push_back(random_tangle(rng, f, src, dst, depth - 1));
      return t_sum(std::move(parts));
    }
    default:
      return random_tangle(rng, f, src, dst, depth - 1);
  }
}

} // namespace tanglerep
