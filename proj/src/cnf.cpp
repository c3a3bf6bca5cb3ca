#include "packlab/cnf.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

#include "packlab/errors.hpp"

namespace packlab {

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::vector<Literal> pending;
    std::size_t pending_line = 0;
    std::size_t line_no = 0, pos = 0;

    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        };
        skip_ws();
        if (i == line.size() || line[i] == 'c' || line[i] == '%') continue;
        if (line[i] == 'p') {
            if (have_header) throw ParseError("duplicate 'p' line", line_no, i);
            std::istringstream hs{std::string(line.substr(i))};
            std::string p, kind;
            long long n = -1, m = -1;
            if (!(hs >> p >> kind >> n >> m) || p != "p" || kind != "cnf" || n < 0 || m < 0)
                throw ParseError("header must be 'p cnf <variables> <clauses>'", line_no, i);
            std::string extra;
            if (hs >> extra) throw ParseError("trailing text after header", line_no, i);
            f.variable_count = static_cast<unsigned>(n);
            declared_clauses = static_cast<std::size_t>(m);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("clause before 'p cnf' header", line_no, i);
        while (i < line.size()) {
            skip_ws();
            if (i == line.size()) break;
            const std::size_t start = i;
            long long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
                throw ParseError("expected an integer literal", line_no, start);
            i = static_cast<std::size_t>(ptr - line.data());
            if (value == 0) {
                if (pending.size() != 3)
                    throw InputError("clause ending on line " + std::to_string(line_no) + " has " +
                                     std::to_string(pending.size()) + " literals; 3SAT clauses need exactly 3");
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            const unsigned long long var = static_cast<unsigned long long>(value < 0 ? -value : value);
            if (var > f.variable_count)
                throw ParseError("variable " + std::to_string(var) + " exceeds declared count", line_no, start);
            if (pending.empty()) pending_line = line_no;
            pending.push_back({static_cast<unsigned>(var), value > 0});
        }
    }
    if (!have_header) throw ParseError("missing 'p cnf' header", line_no, 0);
    if (!pending.empty()) throw ParseError("clause not terminated by 0", pending_line, 0);
    if (f.clauses.size() != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                             std::to_string(f.clauses.size()),
                         line_no, 0);
    return f;
}

std::string format_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& l : c) out << (l.positive ? "" : "-") << l.variable << ' ';
        out << "0\n";
    }
    return out.str();
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
    if (a.size() != f.variable_count) return false;
    for (const Clause& c : f.clauses) {
        bool sat = false;
        for (const Literal& l : c) sat = sat || a[l.variable - 1] == l.positive;
        if (!sat) return false;
    }
    return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
    constexpr unsigned kMaxVariables = 20;
    if (f.variable_count > kMaxVariables)
        throw BudgetError("brute-force SAT is limited to " + std::to_string(kMaxVariables) + " variables", 0);
    const unsigned n = f.variable_count;
    Assignment a(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (unsigned i = 0; i < n; ++i) a[i] = (mask >> (n - 1 - i)) & 1U;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

}  // namespace packlab
