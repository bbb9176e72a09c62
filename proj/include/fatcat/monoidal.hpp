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

#include <optional>
#include <vector>

#include "fatcat/fat.hpp"

namespace fatcat {

/// Monoidal data on a finite category, supplied as tables.
///
/// Tables may be partial: a bounded instance (for example direct sums
/// truncated at a maximum dimension) leaves products outside the bound
/// undefined. Every law is then checked on all tuples for which each term it
/// mentions is defined.
class MonoidalStructure {
public:
    MonoidalStructure(FiniteCategory base, ObjId unit);

    const FiniteCategory& base() const noexcept { return base_; }
    ObjId unit() const noexcept { return unit_; }

    void set_tensor(ObjId a, ObjId b, ObjId result);
    void set_tensor(MorId f, MorId g, MorId result);
    void set_associator(ObjId a, ObjId b, ObjId c, MorId component);
    void set_left_unitor(ObjId a, MorId component);
    void set_right_unitor(ObjId a, MorId component);

    std::optional<ObjId> tensor(ObjId a, ObjId b) const;
    std::optional<MorId> tensor(MorId f, MorId g) const;
    std::optional<MorId> associator(ObjId a, ObjId b, ObjId c) const;
    std::optional<MorId> left_unitor(ObjId a) const;
    std::optional<MorId> right_unitor(ObjId a) const;

    bool operator==(const MonoidalStructure&) const = default;

private:
    std::size_t n_obj() const noexcept { return base_.object_count(); }
    std::size_t n_mor() const noexcept { return base_.morphism_count(); }

    FiniteCategory base_;
    ObjId unit_;
    std::vector<ObjId> tensor_obj_;
    std::vector<MorId> tensor_mor_;
    std::vector<MorId> assoc_;
    std::vector<MorId> lunit_;
    std::vector<MorId> runit_;
};

/// Exhaustive check of the monoidal axioms on the base.
///
/// Laws: "tensor-total", "tensor-endpoints", "tensor-identity",
/// "tensor-composition", "associator-component", "left-unitor-component",
/// "right-unitor-component" (endpoints and invertibility), the naturality
/// squares "associator-naturality", "left-unitor-naturality",
/// "right-unitor-naturality", and "pentagon", "triangle". Witnesses list object
/// names first (the associator triple for associator laws), then morphisms.
ValidationReport validate_monoidal(const MonoidalStructure& m);

/// 1 -> 1 by the identity.
FatObject fat_unit(const MonoidalStructure& m);

/// (x1 (x) x2, y1 (x) y2, f1 (x) f2), or nullopt when a product is undefined.
std::optional<FatObject> try_tensor(const MonoidalStructure& m, FatObject a, FatObject b);

/// Throws Error(out_of_range) when the product lies outside a bounded instance.
FatObject tensor_fat_objects(const MonoidalStructure& m, FatObject a, FatObject b);

/// Cell 1_F (x) X -> X with verticals l_x, l_y and h(phi) = l_y phi l_x^-1.
FatMorphism fat_left_unitor(const MonoidalStructure& m, FatObject x);

/// Cell X (x) 1_F -> X with verticals r_x, r_y and h(phi) = r_y phi r_x^-1.
FatMorphism fat_right_unitor(const MonoidalStructure& m, FatObject x);

/// Cell (X1 X2) X3 -> X1 (X2 X3) induced by the associator naturality square.
FatMorphism fat_associator(const MonoidalStructure& m, FatObject x1, FatObject x2, FatObject x3);

/// Triangle and pentagon as equalities of cells in the fat category.
///
/// Laws: "triangle-slant" (the two slanted squares of the unitor trough
/// commute), "triangle", "pentagon", "associator-bijection". A structure cell
/// that cannot be induced (its square does not commute) is reported against
/// the law that needed it.
ValidationReport verify_fat_coherence(const MonoidalStructure& m, Exec exec = Exec::parallel);

}  // namespace fatcat
