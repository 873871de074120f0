#include "vac/expr.hpp"

#include <algorithm>

namespace vac {

namespace {

ExprPtr make(FieldExpr e) { return std::make_shared<const FieldExpr>(std::move(e)); }

} // namespace

ExprPtr eUnit() {
    static const ExprPtr u = make({FieldExpr::Kind::Unit, "", 0, Scalar(), {}});
    return u;
}

ExprPtr eGen(std::string name) {
    return make({FieldExpr::Kind::Gen, std::move(name), 0, Scalar(), {}});
}

ExprPtr eDer(ExprPtr e, int order) {
    if (order == 0) return e;
    if (e->kind == FieldExpr::Kind::Derive) {
        return make({FieldExpr::Kind::Derive, "", e->order + order, Scalar(), e->kids});
    }
    return make({FieldExpr::Kind::Derive, "", order, Scalar(), {std::move(e)}});
}

ExprPtr eNProd(ExprPtr a, ExprPtr b) {
    return make({FieldExpr::Kind::NProd, "", 0, Scalar(), {std::move(a), std::move(b)}});
}

ExprPtr eNProdN(const std::vector<ExprPtr>& parts) {
    if (parts.empty()) return eUnit();
    ExprPtr out = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) out = eNProd(parts[i], out);
    return out;
}

ExprPtr eScale(Scalar c, ExprPtr e) {
    if (c.isOne()) return e;
    if (e->kind == FieldExpr::Kind::Scale) {
        Scalar merged = c * e->coef;
        return eScale(merged, e->kids[0]);
    }
    return make({FieldExpr::Kind::Scale, "", 0, std::move(c), {std::move(e)}});
}

ExprPtr eSum(std::vector<ExprPtr> parts) {
    std::vector<ExprPtr> flat;
    for (auto& p : parts) {
        if (p->kind == FieldExpr::Kind::Sum) {
            flat.insert(flat.end(), p->kids.begin(), p->kids.end());
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.size() == 1) return flat[0];
    return make({FieldExpr::Kind::Sum, "", 0, Scalar(), std::move(flat)});
}

ExprPtr eNeg(ExprPtr e) { return eScale(Scalar::fromInt(-1), std::move(e)); }

bool exprEqual(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind || a->name != b->name || a->order != b->order ||
        a->kids.size() != b->kids.size())
        return false;
    if (a->kind == FieldExpr::Kind::Scale && !(a->coef == b->coef)) return false;
    for (size_t i = 0; i < a->kids.size(); ++i) {
        if (!exprEqual(a->kids[i], b->kids[i])) return false;
    }
    return true;
}

ExprPtr substitute(const ExprPtr& e, const std::map<std::string, ExprPtr>& images) {
    switch (e->kind) {
        case FieldExpr::Kind::Unit:
            return e;
        case FieldExpr::Kind::Gen: {
            auto it = images.find(e->name);
            return it == images.end() ? e : it->second;
        }
        default: {
            std::vector<ExprPtr> kids;
            kids.reserve(e->kids.size());
            bool changed = false;
            for (const auto& k : e->kids) {
                kids.push_back(substitute(k, images));
                changed = changed || kids.back().get() != k.get();
            }
            if (!changed) return e;
            FieldExpr out = *e;
            out.kids = std::move(kids);
            return make(std::move(out));
        }
    }
}

void collectGenerators(const ExprPtr& e, std::vector<std::string>& out) {
    if (e->kind == FieldExpr::Kind::Gen) {
        if (std::find(out.begin(), out.end(), e->name) == out.end()) out.push_back(e->name);
        return;
    }
    for (const auto& k : e->kids) collectGenerators(k, out);
}

Field eval_expr(const ExprPtr& e, const Algebra& target, Engine& engine) {
    switch (e->kind) {
        case FieldExpr::Kind::Unit:
            return Field::vacuum();
        case FieldExpr::Kind::Gen: {
            Factor f;
            if (!lookupGenerator(e->name, f)) throw UnknownGenerator(e->name);
            if (!target.allows(factorSector(f)))
                throw UnknownGenerator(e->name + " (not a generator of " + target.name + ")");
            return Field::generator(f);
        }
        case FieldExpr::Kind::Derive:
            return engine.derivePow(eval_expr(e->kids[0], target, engine), e->order);
        case FieldExpr::Kind::NProd:
            return engine.nprod(eval_expr(e->kids[0], target, engine),
                                eval_expr(e->kids[1], target, engine));
        case FieldExpr::Kind::Scale:
            return eval_expr(e->kids[0], target, engine)
                .scaled(eval_at_level(e->coef, engine.level()));
        case FieldExpr::Kind::Sum: {
            Field acc;
            for (const auto& k : e->kids) acc = acc + eval_expr(k, target, engine);
            return acc;
        }
    }
    throw InternalError("unhandled expression node");
}

} // namespace vac
