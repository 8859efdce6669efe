#pragma once

// Line-oriented group-definition files:
//   degree N
//   gen NAME (a b c)(d e)        # disjoint cycles, 1-based points
//   subgroup NAME = WORD_LIST    # words over generator names, joined by '*'
// '#' starts a comment; unknown directives are errors.

#include <cctype>
#include <fstream>

#include "fusys/group.hpp"

namespace fusys {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GroupFile {
    GroupPtr group;
    std::vector<std::string> gen_names;        // in file order
    std::map<std::string, Elt> named_element;  // generator name -> element
    std::map<std::string, Subgroup> subgroups;
};

namespace detail {

inline Perm parse_cycles(const std::string& text, int degree, const std::string& where) {
    Perm r = perm_identity(degree);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i == text.size()) return r;  // identity, e.g. "()"
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw ParseError(where + ": expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') { ++i; break; }
            size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            if (j == i) throw ParseError(where + ": expected point number in cycle");
            int pt = std::stoi(text.substr(i, j - i));
            if (pt < 1 || pt > degree) throw ParseError(where + ": point out of range");
            cyc.push_back(pt - 1);
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (r[from] != from) throw ParseError(where + ": cycles are not disjoint");
            r[from] = to;
        }
    }
    return r;
}

inline std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || std::isspace((unsigned char)ch)) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace detail

inline Elt evaluate_word(const GroupFile& gf, const std::string& word) {
    Elt x = 0;
    std::string cur;
    auto apply = [&](const std::string& name) {
        if (name.empty()) throw ParseError("empty generator name in word '" + word + "'");
        auto it = gf.named_element.find(name);
        if (it == gf.named_element.end())
            throw ParseError("unknown generator '" + name + "' in word '" + word + "'");
        x = gf.group->mul(x, it->second);
    };
    for (char ch : word) {
        if (ch == '*') {
            apply(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    apply(cur);
    return x;
}

inline GroupFile parse_group_stream(std::istream& in, int order_cap = -1) {
    int degree = -1;
    std::vector<std::pair<std::string, std::string>> gen_lines;       // name, cycles
    std::vector<std::pair<std::string, std::string>> subgroup_lines;  // name, word list
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno);
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream is(line);
        std::string directive;
        if (!(is >> directive)) continue;
        if (directive == "degree") {
            if (!(is >> degree) || degree < 1) throw ParseError(where + ": bad degree");
        } else if (directive == "gen") {
            std::string name;
            if (!(is >> name)) throw ParseError(where + ": gen needs a name");
            std::string rest;
            std::getline(is, rest);
            gen_lines.emplace_back(name, rest);
        } else if (directive == "subgroup") {
            std::string name, eq;
            if (!(is >> name >> eq) || eq != "=")
                throw ParseError(where + ": expected 'subgroup NAME = WORDS'");
            std::string rest;
            std::getline(is, rest);
            subgroup_lines.emplace_back(name, rest);
        } else {
            throw ParseError(where + ": unknown directive '" + directive + "'");
        }
    }
    if (degree < 1) throw ParseError("missing 'degree' directive");

    GroupFile gf;
    std::vector<Perm> gens;
    for (const auto& [name, cyc] : gen_lines)
        gens.push_back(detail::parse_cycles(cyc, degree, "gen " + name));
    gf.group = FiniteGroup::from_permutations(degree, gens, order_cap);
    for (size_t i = 0; i < gen_lines.size(); ++i) {
        gf.gen_names.push_back(gen_lines[i].first);
        gf.named_element[gen_lines[i].first] = gf.group->index_of(gens[i]);
    }
    for (const auto& [name, words] : subgroup_lines) {
        std::vector<Elt> seed;
        for (const std::string& w : detail::split_words(words)) seed.push_back(evaluate_word(gf, w));
        gf.subgroups[name] = generate_subgroup(gf.group, std::move(seed));
    }
    return gf;
}

inline GroupFile parse_group_file(const std::string& path, int order_cap = -1) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file: " + path);
    return parse_group_stream(in, order_cap);
}

}  // namespace fusys
