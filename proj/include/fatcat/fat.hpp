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

#include <compare>
#include <vector>

#include "fatcat/category.hpp"

namespace fatcat {

/// An object of the fat category: a morphism f: x -> y of the base.
struct FatObject {
    ObjId x;
    ObjId y;
    MorId f;

    auto operator<=>(const FatObject&) const = default;
};

FatObject fat_object(const FiniteCategory& c, MorId f);

/// One fat object per morphism of `c`, in MorId order.
std::vector<FatObject> fat_objects(const FiniteCategory& c);

/// A total set-map hom(src_x, src_y) -> hom(dst_x, dst_y), stored positionally
/// against the canonical (ascending id) order of the source hom-set.
struct HomMap {
    ObjId src_x, src_y;
    ObjId dst_x, dst_y;
    std::vector<MorId> table;

    bool operator==(const HomMap&) const = default;

    /// Image of phi; throws Error(endpoint_mismatch) if phi is not in the source hom-set.
    MorId apply(const FiniteCategory& c, MorId phi) const;
};

HomMap identity_hom_map(const FiniteCategory& c, ObjId x, ObjId y);

/// Pointwise `outer(inner(phi))`; throws Error(composition_undefined) on a middle mismatch.
HomMap compose_hom_maps(const FiniteCategory& c, const HomMap& outer, const HomMap& inner);

/// True when the table is a bijection onto the target hom-set.
bool is_bijection(const FiniteCategory& c, const HomMap& h);

/// A cell (g1, g2, h) from src to dst; equality is extensional.
struct FatMorphism {
    FatObject src;
    FatObject dst;
    MorId g1;
    MorId g2;
    HomMap h;

    bool operator==(const FatMorphism&) const = default;
};

/// Validates and assembles a cell. Endpoint or table typing problems raise
/// Error(endpoint_mismatch); h(src.f) != dst.f raises Error(defining_condition).
FatMorphism make_fat_morphism(const FiniteCategory& c, FatObject src, FatObject dst, MorId g1, MorId g2,
                              HomMap h);

/// (id, id, identity table) on X.
FatMorphism identity_cell(const FiniteCategory& c, FatObject x);

/// `v` after `u`. Requires u.dst == v.src, else Error(composition_undefined).
FatMorphism vertical_compose(const FiniteCategory& c, const FatMorphism& v, const FatMorphism& u);

/// The cell induced by a commuting square g2 . f1 = f2 . g1 with g1 invertible;
/// h(phi) = g2 . phi . g1^-1.
///
/// Throws Error(non_commuting_square) or Error(not_invertible).
FatMorphism induced_from_square(const FiniteCategory& c, MorId f1, MorId f2, MorId g1, MorId g2);

/// Commuting square data, before any cell is built.
struct CommutingSquare {
    MorId f1, f2, g1, g2;
    bool operator==(const CommutingSquare&) const = default;
};

/// All commuting squares with an invertible left vertical. Enumeration is
/// f1-major and deterministic.
std::vector<CommutingSquare> commuting_squares(const FiniteCategory& c);

/// For every vertically pasteable pair of commuting squares with invertible
/// left verticals, the composite of the induced cells equals the cell induced
/// by the pasted square. Law name "lemma1". Throws Error(size_guard) when the
/// sweep is too large to run exhaustively.
ValidationReport verify_lemma1(const FiniteCategory& c, Exec exec = Exec::parallel);

/// The size guard shared by both lemma1 implementations.
void guard_lemma1(const FiniteCategory& c);

}  // namespace fatcat
