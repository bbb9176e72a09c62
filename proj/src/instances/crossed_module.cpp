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

#include "fatcat/crossed_module.hpp"

#include <string>

#include "fatcat/error.hpp"

namespace fatcat {

ValidationReport verify_crossed_module(const CrossedModule& cm)
{
    using E = FiniteGroup::Elem;
    const FiniteGroup& G = cm.G;
    const FiniteGroup& H = cm.H;
    const E ng = static_cast<E>(G.order());
    const E nh = static_cast<E>(H.order());
    if (cm.tau.size() != nh)
        fail(Errc::structural, "tau must have one entry per element of H");
    for (E t : cm.tau)
        if (t >= ng)
            fail(Errc::structural, "tau entry out of range");
    if (cm.alpha.size() != ng)
        fail(Errc::structural, "alpha must have one row per element of G");
    for (const auto& row : cm.alpha) {
        if (row.size() != nh)
            fail(Errc::structural, "alpha row must have one entry per element of H");
        for (E v : row)
            if (v >= nh)
                fail(Errc::structural, "alpha entry out of range");
    }

    ValidationReport r;
    auto gn = [&](E g) { return G.name(g); };
    auto hn = [&](E h) { return H.name(h); };

    for (E h = 0; h < nh; ++h)
        for (E k = 0; k < nh; ++k) {
            r.count("tau-homomorphism");
            if (cm.tau[H.mul(h, k)] != G.mul(cm.tau[h], cm.tau[k]))
                r.add({"tau-homomorphism", {hn(h), hn(k)}, "tau(h h') != tau(h) tau(h')"});
        }

    for (E g = 0; g < ng; ++g) {
        const auto& a = cm.alpha[g];
        std::vector<bool> hit(nh, false);
        for (E h : a)
            hit[h] = true;
        r.count("alpha-automorphism");
        for (E h = 0; h < nh; ++h)
            if (!hit[h]) {
                r.add({"alpha-automorphism", {gn(g)}, "alpha(g) is not a bijection"});
                break;
            }
        for (E h = 0; h < nh; ++h)
            for (E k = 0; k < nh; ++k) {
                r.count("alpha-automorphism");
                if (a[H.mul(h, k)] != H.mul(a[h], a[k]))
                    r.add({"alpha-automorphism", {gn(g), hn(h), hn(k)}, "alpha(g)(h h') != alpha(g)(h) alpha(g)(h')"});
            }
    }

    for (E h = 0; h < nh; ++h) {
        r.count("alpha-action");
        if (cm.alpha[G.identity()][h] != h)
            r.add({"alpha-action", {gn(G.identity()), hn(h)}, "alpha(e) is not the identity"});
    }
    for (E g = 0; g < ng; ++g)
        for (E g2 = 0; g2 < ng; ++g2)
            for (E h = 0; h < nh; ++h) {
                r.count("alpha-action");
                if (cm.alpha[G.mul(g, g2)][h] != cm.alpha[g][cm.alpha[g2][h]])
                    r.add({"alpha-action", {gn(g), gn(g2), hn(h)}, "alpha(g g') != alpha(g) alpha(g')"});
            }

    for (E g = 0; g < ng; ++g)
        for (E h = 0; h < nh; ++h) {
            r.count("peiffer1");
            const E lhs = cm.tau[cm.alpha[g][h]];
            const E rhs = G.mul(G.mul(g, cm.tau[h]), G.inv(g));
            if (lhs != rhs)
                r.add({"peiffer1", {gn(g), hn(h)}, "tau(alpha(g)h) = " + gn(lhs) + " but g tau(h) g^-1 = " + gn(rhs)});
        }
    for (E h = 0; h < nh; ++h)
        for (E k = 0; k < nh; ++k) {
            r.count("peiffer2");
            const E lhs = cm.alpha[cm.tau[h]][k];
            const E rhs = H.mul(H.mul(h, k), H.inv(h));
            if (lhs != rhs)
                r.add({"peiffer2", {hn(h), hn(k)}, "alpha(tau(h))h' = " + hn(lhs) + " but h h' h^-1 = " + hn(rhs)});
        }
    return r;
}

CrossedModule conjugation_crossed_module(const FiniteGroup& g)
{
    CrossedModule cm{g, g, {}, {}};
    for (FiniteGroup::Elem h = 0; h < g.order(); ++h)
        cm.tau.push_back(h);
    cm.alpha.assign(g.order(), std::vector<FiniteGroup::Elem>(g.order()));
    for (FiniteGroup::Elem a = 0; a < g.order(); ++a)
        for (FiniteGroup::Elem h = 0; h < g.order(); ++h)
            cm.alpha[a][h] = g.mul(g.mul(a, h), g.inv(a));
    return cm;
}

CrossedModule trivial_crossed_module(const FiniteGroup& g, const FiniteGroup& h)
{
    CrossedModule cm{g, h, std::vector<FiniteGroup::Elem>(h.order(), g.identity()), {}};
    std::vector<FiniteGroup::Elem> ident(h.order());
    for (FiniteGroup::Elem k = 0; k < h.order(); ++k)
        ident[k] = k;
    cm.alpha.assign(g.order(), ident);
    return cm;
}

}  // namespace fatcat
