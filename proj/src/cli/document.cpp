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

#include "fatcat/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "fatcat/error.hpp"

namespace fatcat {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string SpecDocument::kind() const
{
    static const char* const names[] = {"category", "monoidal", "crossed_module", "lattice"};
    return names[body.index()];
}

const FiniteCategory* SpecDocument::category() const
{
    if (auto* c = std::get_if<FiniteCategory>(&body))
        return c;
    if (auto* m = std::get_if<MonoidalStructure>(&body))
        return &m->base();
    return nullptr;
}

namespace {

// Field access with a location prefix for error messages.
const json& field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object())
        fail(Errc::parse, where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(Errc::parse, where + ": missing field '" + key + "'");
    return *it;
}

const json& array_at(const json& j, const std::string& where)
{
    if (!j.is_array())
        fail(Errc::parse, where + ": expected an array");
    return j;
}

std::string text_at(const json& j, const std::string& where)
{
    if (!j.is_string())
        fail(Errc::parse, where + ": expected a string");
    return j.get<std::string>();
}

std::size_t count_at(const json& j, const std::string& where)
{
    if (!j.is_number_unsigned())
        fail(Errc::parse, where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

class Names {
public:
    explicit Names(std::string what) : what_(std::move(what)) {}

    std::size_t add(const std::string& name, const std::string& where)
    {
        if (!ids_.emplace(name, ids_.size()).second)
            fail(Errc::parse, where + ": duplicate " + what_ + " name '" + name + "'");
        return ids_.size() - 1;
    }

    std::size_t at(const json& j, const std::string& where) const
    {
        const std::string name = text_at(j, where);
        auto it = ids_.find(name);
        if (it == ids_.end())
            fail(Errc::dangling_reference, where + ": unknown " + what_ + " '" + name + "'");
        return it->second;
    }

    std::size_t size() const noexcept { return ids_.size(); }

private:
    std::string what_;
    std::map<std::string, std::size_t> ids_;
};

struct CategoryNames {
    Names objects{"object"};
    Names morphisms{"morphism"};
};

FiniteCategory parse_category(const json& j, SizeLimits limits, CategoryNames& names)
{
    CategoryBuilder b(limits);
    const json& objects = array_at(field(j, "objects", "document"), "objects");
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const std::string where = "objects[" + std::to_string(i) + "]";
        std::string name = text_at(objects[i], where);
        names.objects.add(name, where);
        b.add_object(std::move(name));
    }
    const json& morphisms = array_at(field(j, "morphisms", "document"), "morphisms");
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
        const std::string where = "morphisms[" + std::to_string(i) + "]";
        const json& m = morphisms[i];
        std::string name = text_at(field(m, "name", where), where + ".name");
        const std::size_t dom = names.objects.at(field(m, "dom", where), where + ".dom");
        const std::size_t cod = names.objects.at(field(m, "cod", where), where + ".cod");
        names.morphisms.add(name, where);
        b.add_morphism(std::move(name), obj(dom), obj(cod));
    }
    const json& ids = field(j, "identities", "document");
    if (!ids.is_object())
        fail(Errc::parse, "identities: expected an object");
    for (auto it = ids.begin(); it != ids.end(); ++it) {
        const std::string where = "identities." + it.key();
        b.set_identity_raw(names.objects.at(json(it.key()), where), names.morphisms.at(it.value(), where));
    }
    const json& compose = array_at(field(j, "compose", "document"), "compose");
    for (std::size_t i = 0; i < compose.size(); ++i) {
        const std::string where = "compose[" + std::to_string(i) + "]";
        const json& e = compose[i];
        b.set_composite_raw(names.morphisms.at(field(e, "g", where), where + ".g"),
                            names.morphisms.at(field(e, "f", where), where + ".f"),
                            names.morphisms.at(field(e, "result", where), where + ".result"));
    }
    return std::move(b).build();
}

MonoidalStructure parse_monoidal(const json& j, SizeLimits limits)
{
    CategoryNames names;
    FiniteCategory c = parse_category(j, limits, names);
    const std::size_t unit = names.objects.at(field(j, "unit", "document"), "unit");
    MonoidalStructure m(std::move(c), obj(unit));

    const json& to = array_at(field(j, "tensor_obj", "document"), "tensor_obj");
    for (std::size_t i = 0; i < to.size(); ++i) {
        const std::string where = "tensor_obj[" + std::to_string(i) + "]";
        m.set_tensor(obj(names.objects.at(field(to[i], "a", where), where + ".a")),
                     obj(names.objects.at(field(to[i], "b", where), where + ".b")),
                     obj(names.objects.at(field(to[i], "result", where), where + ".result")));
    }
    const json& tm = array_at(field(j, "tensor_mor", "document"), "tensor_mor");
    for (std::size_t i = 0; i < tm.size(); ++i) {
        const std::string where = "tensor_mor[" + std::to_string(i) + "]";
        m.set_tensor(mor(names.morphisms.at(field(tm[i], "f", where), where + ".f")),
                     mor(names.morphisms.at(field(tm[i], "g", where), where + ".g")),
                     mor(names.morphisms.at(field(tm[i], "result", where), where + ".result")));
    }
    const json& assoc = array_at(field(j, "assoc", "document"), "assoc");
    for (std::size_t i = 0; i < assoc.size(); ++i) {
        const std::string where = "assoc[" + std::to_string(i) + "]";
        const json& e = assoc[i];
        m.set_associator(obj(names.objects.at(field(e, "a", where), where + ".a")),
                         obj(names.objects.at(field(e, "b", where), where + ".b")),
                         obj(names.objects.at(field(e, "c", where), where + ".c")),
                         mor(names.morphisms.at(field(e, "component", where), where + ".component")));
    }
    for (const char* key : {"lunit", "runit"}) {
        const json& u = field(j, key, "document");
        if (!u.is_object())
            fail(Errc::parse, std::string(key) + ": expected an object");
        for (auto it = u.begin(); it != u.end(); ++it) {
            const std::string where = std::string(key) + "." + it.key();
            const ObjId x = obj(names.objects.at(json(it.key()), where));
            const MorId f = mor(names.morphisms.at(it.value(), where));
            if (key[0] == 'l')
                m.set_left_unitor(x, f);
            else
                m.set_right_unitor(x, f);
        }
    }
    return m;
}

FiniteGroup parse_group(const json& j, const std::string& where)
{
    if (j.is_string())
        return named_group(j.get<std::string>());
    Names names("element");
    std::vector<std::string> elements;
    const json& el = array_at(field(j, "elements", where), where + ".elements");
    for (std::size_t i = 0; i < el.size(); ++i) {
        const std::string w = where + ".elements[" + std::to_string(i) + "]";
        elements.push_back(text_at(el[i], w));
        names.add(elements.back(), w);
    }
    const json& rows = array_at(field(j, "table", where), where + ".table");
    if (rows.size() != elements.size())
        fail(Errc::parse, where + ".table: expected " + std::to_string(elements.size()) + " rows");
    std::vector<std::vector<FiniteGroup::Elem>> table;
    for (std::size_t a = 0; a < rows.size(); ++a) {
        const std::string w = where + ".table[" + std::to_string(a) + "]";
        const json& row = array_at(rows[a], w);
        if (row.size() != elements.size())
            fail(Errc::parse, w + ": expected " + std::to_string(elements.size()) + " entries");
        table.emplace_back();
        for (std::size_t b = 0; b < row.size(); ++b)
            table.back().push_back(
                static_cast<FiniteGroup::Elem>(names.at(row[b], w + "[" + std::to_string(b) + "]")));
    }
    return FiniteGroup::from_table(std::move(table), std::move(elements));
}

FiniteGroup::Elem element(const FiniteGroup& g, const json& j, const std::string& where)
{
    const std::string name = text_at(j, where);
    auto e = g.find(name);
    if (!e)
        fail(Errc::dangling_reference, where + ": unknown element '" + name + "'");
    return *e;
}

std::vector<std::vector<FiniteGroup::Elem>> parse_grid(const FiniteGroup& g, const json& j, const std::string& where)
{
    std::vector<std::vector<FiniteGroup::Elem>> out;
    const json& cols = array_at(j, where);
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const std::string w = where + "[" + std::to_string(t) + "]";
        const json& col = array_at(cols[t], w);
        out.emplace_back();
        for (std::size_t s = 0; s < col.size(); ++s)
            out.back().push_back(element(g, col[s], w + "[" + std::to_string(s) + "]"));
    }
    return out;
}

CrossedModule parse_crossed(const json& j)
{
    CrossedModule cm{parse_group(field(j, "G", "document"), "G"), parse_group(field(j, "H", "document"), "H"), {}, {}};
    const json& tau = array_at(field(j, "tau", "document"), "tau");
    for (std::size_t i = 0; i < tau.size(); ++i)
        cm.tau.push_back(element(cm.G, tau[i], "tau[" + std::to_string(i) + "]"));
    cm.alpha = parse_grid(cm.H, field(j, "alpha", "document"), "alpha");
    return cm;
}

LatticeConnection parse_lattice(const json& j, SizeLimits limits)
{
    LatticeConnection l;
    l.G = parse_group(field(j, "group", "document"), "group");
    l.T = count_at(field(j, "T", "document"), "T");
    l.S = count_at(field(j, "S", "document"), "S");
    l.horiz = parse_grid(l.G, field(j, "horiz", "document"), "horiz");
    l.vert = parse_grid(l.G, field(j, "vert", "document"), "vert");
    validate_lattice(l, limits);
    return l;
}

std::string position(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

SpecDocument parse_spec(std::string_view text, SizeLimits limits)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string what = e.what();
        if (auto p = what.find("syntax error"); p != std::string::npos)
            what = what.substr(p);
        fail(Errc::parse, "parse error at " + position(text, e.byte) + ": " + what);
    }
    const std::string kind = text_at(field(j, "kind", "document"), "kind");
    if (kind == "category") {
        CategoryNames names;
        return SpecDocument{parse_category(j, limits, names)};
    }
    if (kind == "monoidal")
        return SpecDocument{parse_monoidal(j, limits)};
    if (kind == "crossed_module")
        return SpecDocument{parse_crossed(j)};
    if (kind == "lattice")
        return SpecDocument{parse_lattice(j, limits)};
    fail(Errc::parse, "kind: unknown document kind '" + kind + "'");
}

SpecDocument load_spec(const std::string& path, SizeLimits limits)
{
    constexpr std::string_view prefix = "builtin:";
    if (path.starts_with(prefix))
        return builtin(path.substr(prefix.size()), limits);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(Errc::parse, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str(), limits);
}

namespace {

ordered_json category_json(const FiniteCategory& c, const std::string& kind)
{
    ordered_json j;
    j["kind"] = kind;
    j["objects"] = c.object_names();
    j["morphisms"] = ordered_json::array();
    for (const auto& m : c.morphisms())
        j["morphisms"].push_back({{"name", m.label}, {"dom", c.object_name(m.dom)}, {"cod", c.object_name(m.cod)}});
    ordered_json ids = ordered_json::object();
    for (std::size_t x = 0; x < c.object_count(); ++x)
        if (c.identity(obj(x)) != kNoMor)
            ids[c.object_name(obj(x))] = c.label(c.identity(obj(x)));
    j["identities"] = ids;
    j["compose"] = ordered_json::array();
    for (const auto& g : c.morphisms())
        for (const auto& f : c.morphisms())
            if (auto r = c.composite(g.id, f.id))
                j["compose"].push_back({{"g", g.label}, {"f", f.label}, {"result", c.label(*r)}});
    return j;
}

ordered_json group_json(const FiniteGroup& g)
{
    ordered_json rows = ordered_json::array();
    for (const auto& row : g.table()) {
        ordered_json r = ordered_json::array();
        for (auto e : row)
            r.push_back(g.name(e));
        rows.push_back(r);
    }
    return {{"elements", g.names()}, {"table", rows}};
}

ordered_json grid_json(const FiniteGroup& g, const std::vector<std::vector<FiniteGroup::Elem>>& grid)
{
    ordered_json out = ordered_json::array();
    for (const auto& col : grid) {
        ordered_json c = ordered_json::array();
        for (auto e : col)
            c.push_back(g.name(e));
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string serialize(const SpecDocument& doc)
{
    ordered_json j;
    if (auto* c = std::get_if<FiniteCategory>(&doc.body)) {
        j = category_json(*c, "category");
    } else if (auto* m = std::get_if<MonoidalStructure>(&doc.body)) {
        const FiniteCategory& c = m->base();
        j = category_json(c, "monoidal");
        j["unit"] = c.object_name(m->unit());
        j["tensor_obj"] = ordered_json::array();
        for (std::size_t a = 0; a < c.object_count(); ++a)
            for (std::size_t b = 0; b < c.object_count(); ++b)
                if (auto r = m->tensor(obj(a), obj(b)))
                    j["tensor_obj"].push_back(
                        {{"a", c.object_name(obj(a))}, {"b", c.object_name(obj(b))}, {"result", c.object_name(*r)}});
        j["tensor_mor"] = ordered_json::array();
        for (const auto& f : c.morphisms())
            for (const auto& g : c.morphisms())
                if (auto r = m->tensor(f.id, g.id))
                    j["tensor_mor"].push_back({{"f", f.label}, {"g", g.label}, {"result", c.label(*r)}});
        j["assoc"] = ordered_json::array();
        for (std::size_t a = 0; a < c.object_count(); ++a)
            for (std::size_t b = 0; b < c.object_count(); ++b)
                for (std::size_t d = 0; d < c.object_count(); ++d)
                    if (auto r = m->associator(obj(a), obj(b), obj(d)))
                        j["assoc"].push_back({{"a", c.object_name(obj(a))},
                                              {"b", c.object_name(obj(b))},
                                              {"c", c.object_name(obj(d))},
                                              {"component", c.label(*r)}});
        ordered_json lu = ordered_json::object(), ru = ordered_json::object();
        for (std::size_t a = 0; a < c.object_count(); ++a) {
            if (auto r = m->left_unitor(obj(a)))
                lu[c.object_name(obj(a))] = c.label(*r);
            if (auto r = m->right_unitor(obj(a)))
                ru[c.object_name(obj(a))] = c.label(*r);
        }
        j["lunit"] = lu;
        j["runit"] = ru;
    } else if (auto* cm = std::get_if<CrossedModule>(&doc.body)) {
        j["kind"] = "crossed_module";
        j["G"] = group_json(cm->G);
        j["H"] = group_json(cm->H);
        ordered_json tau = ordered_json::array();
        for (auto e : cm->tau)
            tau.push_back(cm->G.name(e));
        j["tau"] = tau;
        j["alpha"] = grid_json(cm->H, cm->alpha);
    } else {
        const auto& l = std::get<LatticeConnection>(doc.body);
        j["kind"] = "lattice";
        j["group"] = group_json(l.G);
        j["T"] = l.T;
        j["S"] = l.S;
        j["horiz"] = grid_json(l.G, l.horiz);
        j["vert"] = grid_json(l.G, l.vert);
    }
    return j.dump(1) + "\n";
}

}  // namespace fatcat
