#include "bousfield/cli/evaluator.hpp"

#include "bousfield/cli/parser.hpp"
#include "bousfield/ideals.hpp"

namespace bousfield::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Element as_element(const Node& n) {
  Value v = evaluate(n);
  if (auto* e = std::get_if<Element>(&v)) return *e;
  if (auto* h = std::get_if<HeytingResult>(&v)) return h->element;
  throw EvalError(n.offset, "expected an element");
}

const IndexSet& as_set(const Node& n) { return std::get<SetLit>(n.v).value; }

Value eval_call(const Node& node, const Call& c) {
  const auto& a = c.args;
  switch (c.fn) {
    case Fn::Neg: return negation(as_element(*a[0]));
    case Fn::Heyting: return heyting(as_element(*a[0]), as_element(*a[1]));
    case Fn::Comp: {
      auto y = boolean_complement(as_element(*a[0]));
      if (y) return *y;
      return NoneValue{};
    }
    case Fn::Idem: return is_idempotent(as_element(*a[0]));
    case Fn::Bool: return is_complemented(as_element(*a[0]));
    case Fn::Sigma: return sigma(as_element(*a[0]));
    case Fn::Reconstruct: {
      auto x = reconstruct(SigmaTriple{as_set(*a[0]), as_set(*a[1]), as_set(*a[2])});
      if (x) return *x;
      return NoneValue{};
    }
    case Fn::Proj: {
      const Element eps = as_element(*a[0]);
      const Element x = as_element(*a[1]);
      try {
        return quotient_project(eps, x);
      } catch (const ConstraintError& e) {
        throw EvalError(a[0]->offset, e.what());
      }
    }
    case Fn::Theta: {
      IdealSummary s{as_set(*a[0]), std::get<QLit>(a[1]->v).q, std::get<MShapeLit>(a[2]->v).shape};
      try {
        return theta(s);
      } catch (const ConstraintError& e) {
        throw EvalError(node.offset, e.what());
      }
    }
    case Fn::Sup: {
      std::vector<Element> xs;
      xs.reserve(a.size());
      for (const NodePtr& arg : a) xs.push_back(as_element(*arg));
      return join_all(xs);
    }
    case Fn::Tail: return tail_of(as_element(*a[0]));
    case Fn::Head: return head_of(as_element(*a[0]));
    case Fn::Classify: return as_set(*a[0]).classify();
    case Fn::Catalog: return CatalogListing{list_names()};
  }
  throw EvalError(node.offset, "unsupported function");
}

}  // namespace

Value evaluate(const Node& node) {
  return std::visit(
      overloaded{
          [](const SetLit& s) -> Value { return s.value; },
          [&](const ElemLit& e) -> Value {
            try {
              switch (e.kind) {
                case 't': return Element::t(e.q, e.tail);
                case 'j': return Element::j(e.m, e.tail);
                default: return Element::k(e.tail);
              }
            } catch (const ConstraintError& err) {
              throw EvalError(e.tail_offset, err.what());
            }
          },
          [&](const CatalogRef& r) -> Value {
            try {
              return lookup(r.name, r.param).element;
            } catch (const std::exception& err) {
              throw EvalError(node.offset, err.what());
            }
          },
          [&](const QLit&) -> Value { throw EvalError(node.offset, "not a value"); },
          [&](const MShapeLit&) -> Value { throw EvalError(node.offset, "not a value"); },
          [&](const BinOp& b) -> Value {
            const Element x = as_element(*b.lhs);
            const Element y = as_element(*b.rhs);
            return b.op == BinOpKind::Join ? x + y : x * y;
          },
          [&](const Rel& r) -> Value {
            const Element x = as_element(*r.lhs);
            const Element y = as_element(*r.rhs);
            return r.op == RelKind::Leq ? leq(x, y) : x == y;
          },
          [&](const Call& c) -> Value { return eval_call(node, c); },
      },
      node.v);
}

Value evaluate(std::string_view input) { return evaluate(*parse(input)); }

}  // namespace bousfield::cli
