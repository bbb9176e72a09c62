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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fatcat/category.hpp"
#include "fatcat/monoidal.hpp"

namespace fatcat {

/// Dense matrix over F_p with exact arithmetic.
struct Matrix {
    std::uint32_t p = 2;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;  // row-major, entries in [0, p)

    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::uint32_t p, std::size_t d);

    bool operator==(const Matrix&) const = default;
    auto operator<=>(const Matrix&) const = default;
};

Matrix multiply(const Matrix& x, const Matrix& y);

/// Gaussian elimination mod p. Square matrices only; the 0x0 matrix is invertible.
bool is_invertible(const Matrix& m);

/// [[x, 0], [0, y]].
Matrix block_diag(const Matrix& x, const Matrix& y);

/// "[10;01]" style: rows split by ';', entries comma-separated when p > 10.
std::string matrix_label(const Matrix& m);

/// All invertible d x d matrices over F_p, identity first, then in
/// lexicographic row-major order. Throws Error(size_guard) when p^(d^2) is
/// too large to enumerate.
std::vector<Matrix> general_linear(std::uint32_t p, std::size_t d);

/// A groupoid whose morphisms are invertible matrices, with the matrix of
/// every morphism kept alongside the category.
struct MatrixGroupoid {
    FiniteCategory category;
    std::vector<Matrix> matrices;  // by MorId
    std::uint32_t p = 2;
    std::vector<std::size_t> dims;  // by ObjId
    std::map<std::tuple<std::size_t, std::size_t, std::vector<std::uint32_t>>, MorId> index_of;

    std::optional<MorId> lookup(ObjId dom, ObjId cod, const Matrix& m) const;
};

/// k fibers F_p^d named E0..E{k-1}, with every invertible matrix between every
/// ordered pair. Labels carry "@Ei>Ej" when k > 1.
MatrixGroupoid matrix_groupoid(std::uint32_t p, std::size_t d, std::size_t k, SizeLimits limits = {});

/// One object V0..VD per dimension, with GL(d, F_p) as endomorphisms of Vd.
MatrixGroupoid graded_matrix_groupoid(std::uint32_t p, std::size_t max_dim, SizeLimits limits = {});

/// Block direct sum with the 0-dimensional object as unit and identity
/// associator and unitors. Products whose dimension has no object are left
/// undefined, so a graded family truncated at D gives a bounded instance.
/// Requires one object per dimension, including dimension 0.
MonoidalStructure direct_sum_monoidal(const MatrixGroupoid& g);

}  // namespace fatcat
