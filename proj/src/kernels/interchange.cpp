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

// Exhaustive interchange sweep over 2x2 grids of squares.
//
// Hom-maps are packed as position tables so every composite is a handful of
// byte shuffles. Horizontal composites are evaluated through precomputed
// right-translation tables: h''(f) = h'(f . f1^-1) . h(f1) becomes
// R[h(f1)] o h' o R[f1^-1] applied positionally.

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "fatcat/detail/estimates.hpp"
#include "fatcat/detail/sharded.hpp"
#include "fatcat/double.hpp"
#include "fatcat/error.hpp"
#include "kernels/pos_table.hpp"

namespace fatcat {

namespace {

using kernels::Narrow;
using kernels::Wide;

constexpr std::size_t kMaxPool = std::size_t{1} << 18;
constexpr double kMaxGrids = 4.0e9;

template <class Table>
struct Packed {
    MorId f1, f2, g1, g2;
    ObjId x1, y1, x2, y2;
    MorId f1_inv;
    MorId h_f1;
    Table h;
};

struct Range {
    std::uint32_t begin = 0, end = 0;
};

template <class Table>
class InterchangeKernel {
public:
    InterchangeKernel(const FiniteCategory& c, const std::vector<Square>& pool) : c_(c), n_obj_(c.object_count())
    {
        const std::size_t n_mor = c.morphism_count();
        rt_.resize(n_mor * n_obj_);
        for (const auto& m : c.morphisms()) {
            if (!c.inverse(m.id))
                continue;
            for (std::size_t z = 0; z < n_obj_; ++z) {
                Table& t = rt_[index(m.id) * n_obj_ + z];
                const auto src = c.hom(m.cod, obj(z));
                for (std::size_t i = 0; i < src.size(); ++i)
                    t.v[i] = static_cast<std::uint8_t>(c.hom_position(c.composite_unchecked(src[i], m.id)));
            }
        }

        sq_.reserve(pool.size());
        for (const auto& s : pool) {
            Packed<Table> p{};
            p.f1 = s.src().f;
            p.f2 = s.dst().f;
            p.g1 = s.g1();
            p.g2 = s.g2();
            p.x1 = s.src().x;
            p.y1 = s.src().y;
            p.x2 = s.dst().x;
            p.y2 = s.dst().y;
            p.f1_inv = *c.inverse(p.f1);
            p.h_f1 = s.h().apply(c, p.f1);
            for (std::size_t i = 0; i < s.h().table.size(); ++i)
                p.h.v[i] = static_cast<std::uint8_t>(c.hom_position(s.h().table[i]));
            sq_.push_back(p);
        }

        by_g1_.assign(n_mor, {});
        by_src_.assign(n_mor, {});
        for (std::uint32_t i = 0; i < sq_.size(); ++i) {
            by_g1_[index(sq_[i].g1)].push_back(i);
            by_src_[index(sq_[i].f1)].push_back(i);
        }
        // (src.f, g1) -> contiguous run inside by_src_key_.
        by_src_key_.resize(sq_.size());
        for (std::uint32_t i = 0; i < sq_.size(); ++i)
            by_src_key_[i] = i;
        std::stable_sort(by_src_key_.begin(), by_src_key_.end(), [&](std::uint32_t a, std::uint32_t b) {
            return std::pair(sq_[a].f1, sq_[a].g1) < std::pair(sq_[b].f1, sq_[b].g1);
        });
        for (std::uint32_t i = 0; i < by_src_key_.size();) {
            const auto& s = sq_[by_src_key_[i]];
            std::uint32_t j = i;
            while (j < by_src_key_.size() && sq_[by_src_key_[j]].f1 == s.f1 && sq_[by_src_key_[j]].g1 == s.g1)
                ++j;
            runs_.emplace(key(s.f1, s.g1), Range{i, j});
            i = j;
        }
    }

    double grid_bound() const
    {
        double total = 0;
        std::size_t widest_br = 0;
        for (const auto& [k, r] : runs_)
            widest_br = std::max<std::size_t>(widest_br, r.end - r.begin);
        for (const auto& tl : sq_)
            total += static_cast<double>(by_g1_[index(tl.g2)].size()) *
                     static_cast<double>(by_src_[index(tl.f2)].size()) * static_cast<double>(widest_br);
        return total;
    }

    ValidationReport run(Exec exec) const
    {
        return detail::sharded_sweep(sq_.size(), exec, [&](std::size_t i, ValidationReport& r) { sweep_from(i, r); });
    }

private:
    static std::uint64_t key(MorId f, MorId g) { return (std::uint64_t{index(f)} << 32) | index(g); }

    const Table& rt(MorId g, ObjId z) const { return rt_[index(g) * n_obj_ + index(z)]; }

    std::size_t pos(MorId m) const { return c_.hom_position(m); }

    std::string table_labels(const Table& t, std::size_t n, ObjId x, ObjId y) const
    {
        const auto target = c_.hom(x, y);
        std::string out = "[";
        for (std::size_t i = 0; i < n; ++i) {
            if (i)
                out += ' ';
            out += describe(c_, target[t.v[i]]);
        }
        return out + "]";
    }

    std::vector<std::string> witness(const Packed<Table>& a, const Packed<Table>& b, const Packed<Table>& d,
                                     const Packed<Table>& e) const
    {
        std::vector<std::string> w;
        for (const auto* s : {&a, &b, &d, &e})
            w.push_back("(" + describe(c_, s->f1) + "," + describe(c_, s->g1) + "," + describe(c_, s->g2) + ")");
        return w;
    }

    void sweep_from(std::size_t i, ValidationReport& r) const
    {
        const Packed<Table>& tl = sq_[i];
        std::uint64_t grids = 0;
        std::uint64_t defining = 0;

        for (std::uint32_t j : by_g1_[index(tl.g2)]) {
            const Packed<Table>& tr = sq_[j];
            const std::size_t n_top = c_.hom(tl.x1, tr.y1).size();
            const Table& r1 = rt(tl.f1_inv, tr.y1);
            const Table top = then(rt(tl.h_f1, tr.y2), then(tr.h, r1, n_top), n_top);

            const MorId top_f1 = c_.composite_unchecked(tr.f1, tl.f1);
            const MorId top_f2 = c_.composite_unchecked(tr.f2, tl.f2);
            ++defining;
            if (top.v[pos(top_f1)] != pos(top_f2))
                r.add({"defining-condition", witness(tl, tr, tl, tr),
                       "h''(f1' f1) != f2' f2 for the horizontal composite"});

            const std::size_t n_left = c_.hom(tl.x1, tl.y1).size();
            const std::size_t n_right = c_.hom(tr.x1, tr.y1).size();
            for (std::uint32_t k : by_src_[index(tl.f2)]) {
                const Packed<Table>& bl = sq_[k];
                const Table vl = then(bl.h, tl.h, n_left);
                const MorId vl_h_f1 = c_.hom(bl.x2, bl.y2)[vl.v[pos(tl.f1)]];
                const Table& bot_r1 = rt(bl.f1_inv, tr.y2);

                auto run = runs_.find(key(tr.f2, bl.g2));
                if (run == runs_.end())
                    continue;
                for (std::uint32_t q = run->second.begin; q < run->second.end; ++q) {
                    const Packed<Table>& br = sq_[by_src_key_[q]];
                    ++grids;
                    // Verticals and endpoints of both bracketings are the same
                    // composites of the same edges; the h-tables carry the law.
                    const std::size_t n_bot = c_.hom(bl.x1, br.y1).size();
                    const Table bot = then(rt(bl.h_f1, br.y2), then(br.h, bot_r1, n_bot), n_bot);
                    const Table rows_first = then(bot, top, n_top);

                    const Table vr = then(br.h, tr.h, n_right);
                    const Table columns_first = then(rt(vl_h_f1, br.y2), then(vr, r1, n_top), n_top);

                    if (!same(rows_first, columns_first, n_top)) {
                        r.add({"interchange", witness(tl, tr, bl, br),
                               "rows-first " + table_labels(rows_first, n_top, bl.x2, br.y2) + " vs columns-first " +
                                   table_labels(columns_first, n_top, bl.x2, br.y2)});
                    }
                }
            }
        }
        r.count("interchange", grids);
        r.count("defining-condition", defining);
    }

    const FiniteCategory& c_;
    std::size_t n_obj_;
    std::vector<Table> rt_;
    std::vector<Packed<Table>> sq_;
    std::vector<std::vector<std::uint32_t>> by_g1_;
    std::vector<std::vector<std::uint32_t>> by_src_;
    std::vector<std::uint32_t> by_src_key_;
    std::unordered_map<std::uint64_t, Range> runs_;
};

template <class Table>
ValidationReport run_kernel(const FiniteCategory& c, const std::vector<Square>& pool, Exec exec)
{
    InterchangeKernel<Table> kernel(c, pool);
    const double bound = kernel.grid_bound();
    if (bound > kMaxGrids)
        fail(Errc::size_guard, "interchange sweep would visit up to " + std::to_string(bound) + " grids");
    return kernel.run(exec);
}

}  // namespace

ValidationReport sweep_interchange(const FiniteCategory& c, std::span<const Square> extra, Exec exec)
{
    if (c.max_hom_size() > 256)
        fail(Errc::size_guard, "interchange sweep supports hom-sets of at most 256 morphisms");
    if (detail::square_count(c, true) + static_cast<double>(extra.size()) > kMaxPool)
        fail(Errc::size_guard, "too many squares for an exhaustive interchange sweep");

    std::vector<Square> pool = induced_squares(c);
    pool.insert(pool.end(), extra.begin(), extra.end());

    if (c.max_hom_size() <= 16)
        return run_kernel<Narrow>(c, pool, exec);
    return run_kernel<Wide>(c, pool, exec);
}

}  // namespace fatcat
