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

#include "fatcat/matrix.hpp"

#include <cmath>

#include "fatcat/error.hpp"

namespace fatcat {

namespace {

constexpr double kMaxEnumerated = 1 << 20;

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint32_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t p)
{
    // p is prime, so x^(p-2) is the inverse.
    std::uint64_t r = 1, b = x % p;
    for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1)
            r = r * b % p;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

Matrix Matrix::identity(std::uint32_t p, std::size_t d)
{
    Matrix m{p, d, d, std::vector<std::uint32_t>(d * d, 0)};
    for (std::size_t i = 0; i < d; ++i)
        m.a[i * d + i] = 1 % p;
    return m;
}

Matrix multiply(const Matrix& x, const Matrix& y)
{
    if (x.cols != y.rows || x.p != y.p)
        fail(Errc::composition_undefined, "matrix shapes or fields do not match");
    Matrix out{x.p, x.rows, y.cols, std::vector<std::uint32_t>(x.rows * y.cols, 0)};
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < x.cols; ++k)
                s += std::uint64_t{x.at(i, k)} * y.at(k, j);
            out.a[i * y.cols + j] = static_cast<std::uint32_t>(s % x.p);
        }
    return out;
}

bool is_invertible(const Matrix& m)
{
    if (m.rows != m.cols)
        return false;
    const std::size_t n = m.rows;
    std::vector<std::uint64_t> a(m.a.begin(), m.a.end());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0)
            ++pivot;
        if (pivot == n)
            return false;
        for (std::size_t j = 0; j < n; ++j)
            std::swap(a[col * n + j], a[pivot * n + j]);
        const std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(a[col * n + col]), m.p);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint64_t factor = a[r * n + col] * inv % m.p;
            for (std::size_t j = col; j < n; ++j)
                a[r * n + j] = (a[r * n + j] + (m.p - factor) * a[col * n + j]) % m.p;
        }
    }
    return true;
}

Matrix block_diag(const Matrix& x, const Matrix& y)
{
    if (x.p != y.p)
        fail(Errc::structural, "block_diag over different fields");
    Matrix out{x.p, x.rows + y.rows, x.cols + y.cols, {}};
    out.a.assign(out.rows * out.cols, 0);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            out.a[i * out.cols + j] = x.at(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j)
            out.a[(x.rows + i) * out.cols + x.cols + j] = y.at(i, j);
    return out;
}

std::string matrix_label(const Matrix& m)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (i)
            out += ';';
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j && m.p > 10)
                out += ',';
            out += std::to_string(m.at(i, j));
        }
    }
    return out + "]";
}

std::vector<Matrix> general_linear(std::uint32_t p, std::size_t d)
{
    if (!is_prime(p))
        fail(Errc::structural, std::to_string(p) + " is not prime");
    if (std::pow(static_cast<double>(p), static_cast<double>(d * d)) > kMaxEnumerated)
        fail(Errc::size_guard, "enumerating " + std::to_string(d) + "x" + std::to_string(d) + " matrices over F_" +
                                   std::to_string(p) + " exceeds the size guard");
    const Matrix id = Matrix::identity(p, d);
    std::vector<Matrix> out{id};
    Matrix m{p, d, d, std::vector<std::uint32_t>(d * d, 0)};
    while (true) {
        if (m != id && is_invertible(m))
            out.push_back(m);
        // Odometer over row-major entries, last entry fastest.
        std::size_t k = d * d;
        while (k > 0 && ++m.a[k - 1] == p)
            m.a[--k] = 0;
        if (k == 0)
            break;
    }
    return out;
}

std::optional<MorId> MatrixGroupoid::lookup(ObjId dom, ObjId cod, const Matrix& m) const
{
    auto it = index_of.find({index(dom), index(cod), m.a});
    if (it == index_of.end() || matrices[index(it->second)] != m)
        return std::nullopt;
    return it->second;
}

namespace {

// Shared assembly: `homs[i][j]` lists the matrices from object i to object j.
MatrixGroupoid assemble(std::uint32_t p, std::vector<std::string> names, std::vector<std::size_t> dims,
                        const std::vector<std::vector<std::vector<Matrix>>>& homs, bool suffix, SizeLimits limits)
{
    MatrixGroupoid out;
    out.p = p;
    out.dims = dims;
    CategoryBuilder b(limits);
    std::vector<ObjId> objs;
    for (auto& n : names)
        objs.push_back(b.add_object(n));
    if (objs.size() > limits.max_objects)
        fail(Errc::size_guard, "too many objects");
    std::size_t total = 0;
    for (const auto& row : homs)
        for (const auto& h : row)
            total += h.size();
    if (total > limits.max_morphisms)
        fail(Errc::size_guard, "matrix groupoid would have " + std::to_string(total) + " morphisms");

    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j)
            for (const Matrix& m : homs[i][j]) {
                std::string label = matrix_label(m);
                if (suffix)
                    label += "@" + names[i] + ">" + names[j];
                const MorId id = b.add_morphism(std::move(label), objs[i], objs[j]);
                out.matrices.push_back(m);
                out.index_of.emplace(std::tuple{i, j, m.a}, id);
            }
    for (std::size_t i = 0; i < objs.size(); ++i)
        b.set_identity(objs[i], out.index_of.at({i, i, Matrix::identity(p, dims[i]).a}));

    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j)
            for (std::size_t n = 0; n < homs[i][j].size(); ++n)
                ends.emplace_back(i, j);
    for (std::size_t f = 0; f < out.matrices.size(); ++f)
        for (std::size_t g = 0; g < out.matrices.size(); ++g) {
            if (ends[f].second != ends[g].first)
                continue;
            const Matrix gf = multiply(out.matrices[g], out.matrices[f]);
            b.set_composite(mor(g), mor(f), out.index_of.at({ends[f].first, ends[g].second, gf.a}));
        }
    out.category = std::move(b).build();
    return out;
}

}  // namespace

MatrixGroupoid matrix_groupoid(std::uint32_t p, std::size_t d, std::size_t k, SizeLimits limits)
{
    if (d == 0 || k == 0)
        fail(Errc::structural, "matrix_groupoid needs d >= 1 and k >= 1");
    if (k > limits.max_objects)
        fail(Errc::size_guard, "matrix_groupoid with " + std::to_string(k) + " objects exceeds the object guard");
    const std::vector<Matrix> gl = general_linear(p, d);
    if (gl.size() > limits.max_hom_set)
        fail(Errc::size_guard, "GL(" + std::to_string(d) + ", F_" + std::to_string(p) + ") has " +
                                   std::to_string(gl.size()) + " elements, above the hom-set guard");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i)
        names.push_back("E" + std::to_string(i));
    std::vector<std::vector<std::vector<Matrix>>> homs(k, std::vector<std::vector<Matrix>>(k, gl));
    return assemble(p, std::move(names), std::vector<std::size_t>(k, d), homs, k > 1, limits);
}

MatrixGroupoid graded_matrix_groupoid(std::uint32_t p, std::size_t max_dim, SizeLimits limits)
{
    if (max_dim + 1 > limits.max_objects)
        fail(Errc::size_guard, "graded family exceeds the object guard");
    std::vector<std::string> names;
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::vector<Matrix>>> homs(max_dim + 1, std::vector<std::vector<Matrix>>(max_dim + 1));
    for (std::size_t d = 0; d <= max_dim; ++d) {
        names.push_back("V" + std::to_string(d));
        dims.push_back(d);
        homs[d][d] = d == 0 ? std::vector<Matrix>{Matrix::identity(p, 0)} : general_linear(p, d);
        if (homs[d][d].size() > limits.max_hom_set)
            fail(Errc::size_guard, "GL(" + std::to_string(d) + ", F_" + std::to_string(p) +
                                       ") exceeds the hom-set guard");
    }
    return assemble(p, std::move(names), std::move(dims), homs, false, limits);
}

MonoidalStructure direct_sum_monoidal(const MatrixGroupoid& g)
{
    const FiniteCategory& c = g.category;
    std::map<std::size_t, ObjId> by_dim;
    for (std::size_t i = 0; i < g.dims.size(); ++i)
        if (!by_dim.emplace(g.dims[i], obj(i)).second)
            fail(Errc::structural, "direct sum needs one object per dimension; dimension " +
                                       std::to_string(g.dims[i]) + " repeats");
    auto unit = by_dim.find(0);
    if (unit == by_dim.end())
        fail(Errc::structural, "direct sum needs a 0-dimensional object as unit");

    MonoidalStructure m(c, unit->second);
    auto sum = [&](ObjId a, ObjId b) -> std::optional<ObjId> {
        auto it = by_dim.find(g.dims[index(a)] + g.dims[index(b)]);
        if (it == by_dim.end())
            return std::nullopt;
        return it->second;
    };
    for (std::size_t a = 0; a < c.object_count(); ++a)
        for (std::size_t b = 0; b < c.object_count(); ++b)
            if (auto s = sum(obj(a), obj(b)))
                m.set_tensor(obj(a), obj(b), *s);
    for (const auto& f : c.morphisms())
        for (const auto& h : c.morphisms()) {
            const auto dom = sum(f.dom, h.dom);
            const auto cod = sum(f.cod, h.cod);
            if (!dom || !cod)
                continue;
            if (auto r = g.lookup(*dom, *cod, block_diag(g.matrices[index(f.id)], g.matrices[index(h.id)])))
                m.set_tensor(f.id, h.id, *r);
        }
    for (std::size_t a = 0; a < c.object_count(); ++a) {
        for (std::size_t b = 0; b < c.object_count(); ++b)
            for (std::size_t d = 0; d < c.object_count(); ++d) {
                const auto ab = sum(obj(a), obj(b));
                const auto abd = ab ? sum(*ab, obj(d)) : std::nullopt;
                if (abd)
                    m.set_associator(obj(a), obj(b), obj(d), c.identity(*abd));
            }
        m.set_left_unitor(obj(a), c.identity(obj(a)));
        m.set_right_unitor(obj(a), c.identity(obj(a)));
    }
    return m;
}

}  // namespace fatcat
