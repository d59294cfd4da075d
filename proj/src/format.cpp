#include <mlcp/errors.hpp>
#include <mlcp/format.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

namespace mlcp {

namespace {

std::string_view trim(std::string_view s)
{
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || ! (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_value_token(std::string_view s)
{
    if (s.empty() || s.find("..") != std::string_view::npos)
        return false;
    return std::none_of(s.begin(), s.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || std::string_view(",:&|{}=>~#").find(c) != std::string_view::npos;
    });
}

class Parser
{
public:
    CPNet run(std::istream & in)
    {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            std::string_view text = raw;
            if (auto hash = text.find('#'); hash != std::string_view::npos)
                text = text.substr(0, hash);
            text = trim(text);
            if (text.empty())
                continue;
            dispatch(text);
        }
        return finish();
    }

private:
    struct PendingVar
    {
        std::string name;
        std::optional<OrderedDomain> domain;
        std::vector<VarIndex> parents;
        std::optional<Cpt> cpt;
        std::size_t cpt_line = 0;
    };

    [[noreturn]] void fail(const std::string & reason) const { throw ParseError(line_, reason); }

    void dispatch(std::string_view text)
    {
        auto space = text.find_first_of(" \t");
        auto keyword = text.substr(0, space);
        auto rest = space == std::string_view::npos ? std::string_view{} : trim(text.substr(space));
        if (keyword == "NET")
            net_line(rest);
        else if (keyword == "VAR")
            var_line(rest);
        else if (keyword == "CPT")
            cpt_line(rest);
        else
            row_line(text);
    }

    void net_line(std::string_view rest)
    {
        if (name_)
            fail("duplicate NET line");
        if (! vars_.empty())
            fail("NET must come before any VAR or CPT");
        if (rest.empty() || rest.find_first_of(" \t") != std::string_view::npos)
            fail("NET needs a single-token name");
        name_ = std::string(rest);
    }

    void var_line(std::string_view rest)
    {
        if (! name_)
            fail("missing NET line before VAR");
        auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            fail("expected 'VAR <name> : <values>'");
        auto name = trim(rest.substr(0, colon));
        auto values = trim(rest.substr(colon + 1));
        if (! is_identifier(name))
            fail("bad variable name '" + std::string(name) + "'");
        if (index_.contains(std::string(name)))
            fail("duplicate variable '" + std::string(name) + "'");

        PendingVar var;
        var.name = std::string(name);
        try {
            if (auto dots = values.find(".."); dots != std::string_view::npos && values.find(',') == std::string_view::npos) {
                auto lo = parse_integer(trim(values.substr(0, dots)));
                auto hi = parse_integer(trim(values.substr(dots + 2)));
                if (! lo || ! hi)
                    fail("integer range needs integer bounds");
                var.domain = OrderedDomain::integer_range(*lo, *hi);
            }
            else {
                std::vector<std::string> tokens;
                for (auto tok : split(values, ',')) {
                    if (! is_value_token(tok))
                        fail("bad value token '" + std::string(tok) + "'");
                    tokens.emplace_back(tok);
                }
                var.domain = OrderedDomain::enumerated(std::move(tokens));
            }
        }
        catch (const ModelError & e) {
            fail(e.what());
        }
        index_.emplace(var.name, static_cast<VarIndex>(vars_.size()));
        vars_.push_back(std::move(var));
    }

    VarIndex lookup_var(std::string_view name) const
    {
        auto it = index_.find(std::string(name));
        if (it == index_.end())
            fail("unknown variable '" + std::string(name) + "'");
        return it->second;
    }

    ValueIndex lookup_value(VarIndex x, std::string_view token) const
    {
        auto v = vars_[x].domain->find(token);
        if (! v)
            fail("unknown value '" + std::string(token) + "' for variable '" + vars_[x].name + "'");
        return *v;
    }

    void cpt_line(std::string_view rest)
    {
        auto bar = rest.find('|');
        auto name = trim(rest.substr(0, bar));
        VarIndex x = lookup_var(name);
        auto & var = vars_[x];
        if (var.cpt)
            fail("duplicate CPT for '" + var.name + "'");
        if (bar != std::string_view::npos) {
            for (auto p : split(rest.substr(bar + 1), ',')) {
                VarIndex pi = lookup_var(p);
                if (pi == x)
                    fail("variable '" + var.name + "' cannot be its own parent");
                if (std::find(var.parents.begin(), var.parents.end(), pi) != var.parents.end())
                    fail("duplicate parent '" + std::string(p) + "'");
                var.parents.push_back(pi);
            }
        }
        var.cpt.emplace();
        var.cpt_line = line_;
        current_ = x;
    }

    Predicate parse_predicate(VarIndex parent, std::string_view rhs, bool equals_form) const
    {
        Predicate pred;
        if (equals_form) {
            pred.form = PredicateForm::equals;
            pred.values = ValueSet::single(lookup_value(parent, rhs));
            return pred;
        }
        if (rhs.starts_with('{')) {
            if (! rhs.ends_with('}'))
                fail("unterminated value set");
            auto inner = trim(rhs.substr(1, rhs.size() - 2));
            if (inner.empty())
                fail("empty value set");
            std::vector<ValueIndex> values;
            for (auto tok : split(inner, ','))
                values.push_back(lookup_value(parent, tok));
            pred.form = PredicateForm::set;
            pred.values = ValueSet::of(std::move(values));
            return pred;
        }
        auto dots = rhs.find("..");
        if (dots == std::string_view::npos)
            fail("expected 'lo..hi' or '{...}' after 'in'");
        auto lo = lookup_value(parent, trim(rhs.substr(0, dots)));
        auto hi = lookup_value(parent, trim(rhs.substr(dots + 2)));
        if (lo > hi)
            fail("empty range '" + std::string(rhs) + "'");
        pred.form = PredicateForm::range;
        pred.values = ValueSet::interval(lo, hi);
        return pred;
    }

    Ranking parse_ranking(VarIndex x, std::string_view text) const
    {
        const auto n = vars_[x].domain->size();
        if (text == "ASC")
            return Ranking::ascending(n);
        if (text == "DESC")
            return Ranking::descending(n);
        if (text.find('~') != std::string_view::npos)
            fail("ties ('~') are not supported in rankings");
        std::vector<ValueIndex> order;
        std::vector<bool> seen(n, false);
        for (auto tok : split(text, '>')) {
            auto v = lookup_value(x, tok);
            if (seen[v])
                fail("duplicate ranking value '" + std::string(tok) + "'");
            seen[v] = true;
            order.push_back(v);
        }
        if (order.size() != n)
            fail("ranking must list every value of '" + vars_[x].name + "'");
        return Ranking::explicit_order(std::move(order), n);
    }

    void row_line(std::string_view text)
    {
        if (! current_)
            fail("row outside of a CPT block");
        VarIndex x = *current_;
        auto & var = vars_[x];
        auto colon = text.find(':');
        if (colon == std::string_view::npos)
            fail("expected '<conditions> : <ranking>'");
        auto conds = trim(text.substr(0, colon));
        auto ranking_text = trim(text.substr(colon + 1));

        if (var.parents.empty() && ! var.cpt->rows.empty())
            fail("CPT of root variable '" + var.name + "' must have exactly one row");

        std::vector<std::optional<Predicate>> slots(var.parents.size());
        if (! conds.empty()) {
            for (auto cond : split(conds, '&')) {
                std::string_view lhs, rhs;
                bool equals_form = false;
                if (auto eq = cond.find('='); eq != std::string_view::npos) {
                    lhs = trim(cond.substr(0, eq));
                    rhs = trim(cond.substr(eq + 1));
                    equals_form = true;
                }
                else {
                    auto sp = cond.find_first_of(" \t");
                    lhs = cond.substr(0, sp);
                    auto tail = sp == std::string_view::npos ? std::string_view{} : trim(cond.substr(sp));
                    if (! tail.starts_with("in") || (tail.size() > 2 && ! std::isspace(static_cast<unsigned char>(tail[2]))))
                        fail("bad condition '" + std::string(cond) + "'");
                    rhs = trim(tail.substr(2));
                }
                VarIndex p = lookup_var(lhs);
                auto slot = std::find(var.parents.begin(), var.parents.end(), p);
                if (slot == var.parents.end())
                    fail("'" + std::string(lhs) + "' is not a parent of '" + var.name + "'");
                auto & target = slots[static_cast<std::size_t>(slot - var.parents.begin())];
                if (target)
                    fail("parent '" + std::string(lhs) + "' constrained twice in one row");
                target = parse_predicate(p, rhs, equals_form);
            }
        }

        std::vector<Predicate> condition;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (! slots[k])
                fail("row does not constrain parent '" + vars_[var.parents[k]].name + "'");
            condition.push_back(std::move(*slots[k]));
        }
        var.cpt->rows.push_back(CptRow{std::move(condition), parse_ranking(x, ranking_text), line_});
    }

    CPNet finish()
    {
        if (! name_)
            fail("missing NET line");
        if (vars_.empty())
            fail("net declares no variables");
        std::vector<Variable> variables;
        std::vector<Cpt> cpts;
        for (auto & v : vars_) {
            if (! v.cpt)
                fail("variable '" + v.name + "' has no CPT");
            if (v.cpt->rows.empty())
                throw ParseError(v.cpt_line, "CPT of '" + v.name + "' has no rows");
            variables.push_back(Variable{v.name, std::move(*v.domain), v.parents});
            cpts.push_back(std::move(*v.cpt));
        }
        try {
            return CPNet(*name_, std::move(variables), std::move(cpts));
        }
        catch (const ModelError & e) {
            fail(e.what());
        }
    }

    std::size_t line_ = 0;
    std::optional<std::string> name_;
    std::vector<PendingVar> vars_;
    std::map<std::string, VarIndex> index_;
    std::optional<VarIndex> current_;
};

std::string format_predicate(const CPNet & net, VarIndex parent, const Predicate & pred)
{
    const auto & var = net.variable(parent);
    const auto & iv = pred.values.intervals();
    switch (pred.form) {
    case PredicateForm::equals:
        return var.name + "=" + var.domain.value(iv.front().lo);
    case PredicateForm::range:
        return var.name + " in " + var.domain.value(iv.front().lo) + ".." + var.domain.value(iv.front().hi);
    case PredicateForm::set:
        break;
    }
    std::string out = var.name + " in {";
    bool first = true;
    for (const auto & i : iv)
        for (std::uint64_t v = i.lo; v <= i.hi; ++v) {
            out += (first ? "" : ",") + var.domain.value(static_cast<ValueIndex>(v));
            first = false;
        }
    return out + "}";
}

std::string format_ranking(const OrderedDomain & domain, const Ranking & r)
{
    switch (r.kind()) {
    case Ranking::Kind::ascending:
        return "ASC";
    case Ranking::Kind::descending:
        return "DESC";
    case Ranking::Kind::explicit_order:
        break;
    }
    std::string out;
    for (auto v : r.permutation())
        out += (out.empty() ? "" : " > ") + domain.value(v);
    return out;
}

std::vector<std::pair<VarIndex, ValueIndex>> parse_assignments(const CPNet & net, std::string_view literal)
{
    std::vector<std::pair<VarIndex, ValueIndex>> out;
    literal = trim(literal);
    if (literal.empty())
        return out;
    std::vector<bool> seen(net.size(), false);
    for (auto item : split(literal, ',')) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(0, "expected 'name=value' in outcome literal, got '" + std::string(item) + "'");
        auto name = trim(item.substr(0, eq));
        auto token = trim(item.substr(eq + 1));
        auto x = net.find_variable(name);
        if (! x)
            throw ParseError(0, "unknown variable '" + std::string(name) + "' in outcome literal");
        if (seen[*x])
            throw ParseError(0, "variable '" + std::string(name) + "' assigned twice in outcome literal");
        seen[*x] = true;
        auto v = net.variable(*x).domain.find(token);
        if (! v)
            throw ParseError(0, "unknown value '" + std::string(token) + "' for variable '" + std::string(name) + "'");
        out.emplace_back(*x, *v);
    }
    return out;
}

} // namespace

CPNet parse_cpnet(std::istream & in)
{
    return Parser{}.run(in);
}

CPNet parse_cpnet(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_cpnet(in);
}

CPNet load_cpnet(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (! in)
        throw ParseError(0, "cannot open '" + path.string() + "'");
    return parse_cpnet(in);
}

std::string serialize_cpnet(const CPNet & net)
{
    std::string out = "NET " + net.name() + "\n";
    for (const auto & var : net.variables()) {
        out += "VAR " + var.name + " : ";
        if (var.domain.kind() == OrderedDomain::Kind::integer_range)
            out += std::to_string(var.domain.range_lo()) + ".." + std::to_string(var.domain.range_hi());
        else {
            const auto & tokens = var.domain.tokens();
            for (std::size_t i = 0; i < tokens.size(); ++i)
                out += (i ? ", " : "") + tokens[i];
        }
        out += "\n";
    }
    for (VarIndex x = 0; x < net.size(); ++x) {
        const auto & var = net.variable(x);
        out += "CPT " + var.name;
        for (std::size_t k = 0; k < var.parents.size(); ++k)
            out += (k ? ", " : " | ") + net.variable(var.parents[k]).name;
        out += "\n";
        for (const auto & row : net.cpt(x).rows) {
            std::string cond;
            for (std::size_t k = 0; k < var.parents.size(); ++k)
                cond += (k ? " & " : "") + format_predicate(net, var.parents[k], row.condition[k]);
            out += "  " + cond + (cond.empty() ? ": " : " : ") + format_ranking(var.domain, row.ranking) + "\n";
        }
    }
    return out;
}

Outcome parse_outcome(const CPNet & net, std::string_view literal)
{
    auto partial = parse_partial(net, literal);
    std::vector<ValueIndex> values;
    for (VarIndex x = 0; x < net.size(); ++x) {
        if (! partial[x])
            throw ParseError(0, "outcome literal does not assign '" + net.variable(x).name + "'");
        values.push_back(*partial[x]);
    }
    return Outcome(std::move(values));
}

PartialAssignment parse_partial(const CPNet & net, std::string_view literal)
{
    PartialAssignment out(net.size());
    for (auto [x, v] : parse_assignments(net, literal))
        out[x] = v;
    return out;
}

std::string format_outcome(const CPNet & net, const Outcome & o)
{
    std::string out;
    for (VarIndex x = 0; x < net.size(); ++x)
        out += (x ? "," : "") + net.variable(x).name + "=" + net.variable(x).domain.value(o[x]);
    return out;
}

} // namespace mlcp
