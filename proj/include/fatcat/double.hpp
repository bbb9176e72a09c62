/*
 * Copyright 2026 The fatcat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fatcat/fat.hpp"

namespace fatcat {

/// A cell whose verticals and horizontal edges are all invertible.
class Square {
public:
    /// Throws Error(not_invertible) naming the first non-invertible edge.
    static Square make(const FiniteCategory& c, FatMorphism cell);

    const FatMorphism& cell() const noexcept { return cell_; }
    const FatObject& src() const noexcept { return cell_.src; }
    const FatObject& dst() const noexcept { return cell_.dst; }
    MorId g1() const noexcept { return cell_.g1; }
    MorId g2() const noexcept { return cell_.g2; }
    const HomMap& h() const noexcept { return cell_.h; }

    bool operator==(const Square&) const = default;

private:
    explicit Square(FatMorphism cell) : cell_(std::move(cell)) {}

    FatMorphism cell_;
};

/// Side-by-side pasting; `right` shares its left vertical with `left`'s right one.
///
/// h''(f) = right.h(f . f1^-1) . left.h(f1), with f1 = left.src().f.
/// Throws Error(shared_vertical_mismatch) when right.g1() != left.g2().
Square horizontal_compose(const FiniteCategory& c, const Square& left, const Square& right);

Square vertical_compose(const FiniteCategory& c, const Square& v, const Square& u);

/// Horizontal unit on the vertical g: x -> x'. Cell from id_x to id_x' with
/// both verticals g and h(phi) = g . phi . g^-1.
Square horizontal_identity(const FiniteCategory& c, MorId g);

struct SquareGrid {
    Square top_left;
    Square top_right;
    Square bottom_left;
    Square bottom_right;
};

struct InterchangeOutcome {
    bool holds;
    FatMorphism rows_first;     // (BL |H| BR) after (TL |H| TR)
    FatMorphism columns_first;  // (TL then BL) |H| (TR then BR)
};

/// Evaluates both bracketings of a 2x2 grid and compares them as cells.
/// Throws Error(not_pasteable) when the grid's shared edges disagree.
InterchangeOutcome verify_interchange(const FiniteCategory& c, const SquareGrid& grid);

/// r_g: hom(x, z) -> hom(y, z), f |-> f . g, for invertible g: y -> x.
HomMap right_translation(const FiniteCategory& c, MorId g, ObjId z);

/// A named, deterministic test on hom-maps selecting a subcategory of cells.
struct CellPredicate {
    std::string name;
    std::function<bool(const FiniteCategory&, const HomMap&)> test;
};

CellPredicate always_predicate();
CellPredicate identity_predicate();
/// phi |-> u . phi . v for some invertible u: y1 -> y2, v: x2 -> x1.
CellPredicate two_sided_translation_predicate();

/// Looks up one of the predicates above by name; nullopt if unknown.
std::optional<CellPredicate> predicate_by_name(const std::string& name);

/// Closure of a predicate-defined subcategory under both compositions.
///
/// Laws: "translation-membership" (precondition: every r_g satisfies P; if any
/// fails the closure checks are skipped), "vertical-closure",
/// "horizontal-closure", "factorization" (h'' == r_{h(f1)} . h' . r_{f1^-1}).
/// The cells considered are all induced squares plus `extra`. Throws
/// Error(size_guard) when there are too many of them.
ValidationReport verify_enrichment_closure(const FiniteCategory& c, const CellPredicate& p,
                                           std::span<const Square> extra = {});

/// All induced squares of `c`: commuting squares whose four edges are invertible.
std::vector<Square> induced_squares(const FiniteCategory& c);

/// Exhaustive interchange sweep over every pasteable 2x2 grid drawn from the
/// induced squares plus `extra`.
///
/// Laws: "interchange" (one per grid), "defining-condition" (h''(f1' f1) ==
/// f2' f2 for every horizontally composable pair). The first failing grid is
/// reported with both evaluated h-tables.
ValidationReport sweep_interchange(const FiniteCategory& c, std::span<const Square> extra = {},
                                   Exec exec = Exec::parallel);

}  // namespace fatcat
