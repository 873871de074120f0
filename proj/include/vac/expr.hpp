#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vac/engine.hpp"

namespace vac {

// Symbolic field expression over named generators. Trees are immutable and
// shared. NProd is binary; n-ary displays right-nest.
struct FieldExpr;
using ExprPtr = std::shared_ptr<const FieldExpr>;

struct FieldExpr {
    enum class Kind { Unit, Gen, Derive, NProd, Scale, Sum };

    Kind kind;
    std::string name;       // Gen
    int order = 0;          // Derive
    Scalar coef;            // Scale
    std::vector<ExprPtr> kids;
};

ExprPtr eUnit();
ExprPtr eGen(std::string name);
ExprPtr eDer(ExprPtr e, int order = 1);      // order >= 1, merges nested Derive
ExprPtr eNProd(ExprPtr a, ExprPtr b);
// Right-nested product of two or more elements.
ExprPtr eNProdN(const std::vector<ExprPtr>& parts);
ExprPtr eScale(Scalar c, ExprPtr e);          // merges nested Scale, drops 1
ExprPtr eSum(std::vector<ExprPtr> parts);     // flattens nested Sum
ExprPtr eNeg(ExprPtr e);

bool exprEqual(const ExprPtr& a, const ExprPtr& b);

// Replace generator leaves by their images; leaves absent from the map are
// kept. Used to push presented-algebra expressions through a homomorphism.
ExprPtr substitute(const ExprPtr& e, const std::map<std::string, ExprPtr>& images);

// Generator names appearing in the tree.
void collectGenerators(const ExprPtr& e, std::vector<std::string>& out);

// Evaluate in a free-field target algebra. Throws UnknownGenerator when a
// name is not a generator of the target.
Field eval_expr(const ExprPtr& e, const Algebra& target, Engine& engine);

} // namespace vac
