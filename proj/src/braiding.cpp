#include "nichols/braiding.hpp"

#include <sstream>
#include <stdexcept>

#include "nichols/errors.hpp"

namespace nichols {

BraidingMatrix::BraidingMatrix(ContextPtr ctx, int rank)
    : ctx_(std::move(ctx)), rank_(rank), entries_(size_t(rank) * rank, UnitMonomial(ctx_)) {
    if (rank < 1) throw std::invalid_argument("braiding rank must be at least 1");
}

BraidingMatrix::BraidingMatrix(ContextPtr ctx, int rank, std::vector<UnitMonomial> entries)
    : ctx_(std::move(ctx)), rank_(rank), entries_(std::move(entries)) {
    if (rank < 1) throw std::invalid_argument("braiding rank must be at least 1");
    if (entries_.size() != size_t(rank) * rank) throw std::invalid_argument("braiding needs rank^2 entries");
    for (const auto& e : entries_) require_same_context(ctx_, e.context());
}

void BraidingMatrix::check_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
        throw IndexOutOfRange("braiding index (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") out of range for rank " + std::to_string(rank_));
}

const UnitMonomial& BraidingMatrix::at(int i, int j) const {
    check_index(i, j);
    return entries_[size_t(i) * rank_ + j];
}

void BraidingMatrix::set(int i, int j, UnitMonomial value) {
    check_index(i, j);
    require_same_context(ctx_, value.context());
    entries_[size_t(i) * rank_ + j] = std::move(value);
}

std::vector<int64_t> BraidingMatrix::key() const {
    std::vector<int64_t> k;
    k.reserve(entries_.size() * (1 + size_t(ctx_->param_count())));
    for (const auto& e : entries_) {
        k.push_back(e.torsion_exp());
        k.insert(k.end(), e.free_exps().begin(), e.free_exps().end());
    }
    return k;
}

bool operator==(const BraidingMatrix& a, const BraidingMatrix& b) {
    return a.rank_ == b.rank_ && same_context(a.ctx_, b.ctx_) && a.entries_ == b.entries_;
}

CartanMatrix::CartanMatrix(IntMatrix a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols() || a_.rows() < 1) throw std::invalid_argument("Cartan matrix must be square");
    for (int i = 0; i < a_.rows(); ++i)
        for (int j = 0; j < a_.cols(); ++j) {
            if (i == j && a_(i, j) != 2) throw std::invalid_argument("Cartan matrix needs a_ii = 2");
            if (i != j && a_(i, j) > 0) throw std::invalid_argument("Cartan matrix needs a_ij <= 0 for i != j");
            if (i != j && (a_(i, j) == 0) != (a_(j, i) == 0))
                throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
        }
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

long parse_int(const std::string& tok, int line, const char* what) {
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
    return v;
}

struct RawEntry {
    int line;
    std::string monomial;
};

}  // namespace

BraidingMatrix parse_braiding(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::optional<int> rank;
    std::optional<int> order;
    std::optional<std::vector<std::string>> params;
    std::vector<std::optional<RawEntry>> entries;
    int first_entry_line = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto tokens = split_ws(raw);
        if (tokens.empty()) continue;
        const std::string& directive = tokens[0];

        if (!rank) {
            if (directive != "rank") throw ParseError(line_no, "first directive must be 'rank <n>'");
            if (tokens.size() != 2) throw ParseError(line_no, "'rank' takes exactly one argument");
            const long n = parse_int(tokens[1], line_no, "rank");
            if (n < 1 || n > 64) throw ParseError(line_no, "rank must be between 1 and 64");
            rank = int(n);
            entries.assign(size_t(n) * n, std::nullopt);
            continue;
        }
        if (directive == "rank") throw ParseError(line_no, "duplicate 'rank' directive");
        if (directive == "order" || directive == "params") {
            if (first_entry_line) throw ParseError(line_no, "'" + directive + "' must precede all entries");
            if (directive == "order") {
                if (order) throw ParseError(line_no, "duplicate 'order' directive");
                if (tokens.size() != 2) throw ParseError(line_no, "'order' takes exactly one argument");
                const long n = parse_int(tokens[1], line_no, "order");
                if (n < 1 || n > 100000) throw ParseError(line_no, "order must be a positive integer");
                order = int(n);
            } else {
                if (params) throw ParseError(line_no, "duplicate 'params' directive");
                params = std::vector<std::string>(tokens.begin() + 1, tokens.end());
            }
            continue;
        }
        if (directive == "entry") {
            if (tokens.size() < 4) throw ParseError(line_no, "'entry' needs <i> <j> <monomial>");
            const long i = parse_int(tokens[1], line_no, "entry row");
            const long j = parse_int(tokens[2], line_no, "entry column");
            if (i < 1 || j < 1 || i > *rank || j > *rank)
                throw ParseError(line_no, "entry index out of range for rank " + std::to_string(*rank));
            auto& slot = entries[size_t(i - 1) * *rank + size_t(j - 1)];
            if (slot) throw ParseError(line_no, "duplicate entry " + std::to_string(i) + " " + std::to_string(j));
            std::string mono;
            for (size_t k = 3; k < tokens.size(); ++k) mono += tokens[k];
            slot = RawEntry{line_no, mono};
            if (!first_entry_line) first_entry_line = line_no;
            continue;
        }
        throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
    if (!rank) throw ParseError(0, "missing 'rank' directive");

    ContextPtr ctx;
    try {
        ctx = ScalarContext::make(order.value_or(0), params.value_or(std::vector<std::string>{}));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }

    std::vector<UnitMonomial> values;
    values.reserve(entries.size());
    for (size_t k = 0; k < entries.size(); ++k) {
        if (!entries[k]) {
            const int i = int(k) / *rank + 1, j = int(k) % *rank + 1;
            throw ParseError(0, "missing entry " + std::to_string(i) + " " + std::to_string(j));
        }
        try {
            values.push_back(parse_monomial(ctx, entries[k]->monomial));
        } catch (const ParseError& e) {
            throw ParseError(entries[k]->line, e.what());
        }
    }
    return BraidingMatrix(ctx, *rank, std::move(values));
}

std::string serialize_braiding(const BraidingMatrix& q) {
    std::ostringstream os;
    const auto& ctx = *q.context();
    os << "rank " << q.rank() << '\n';
    if (ctx.torsion_order() > 0) os << "order " << ctx.torsion_order() << '\n';
    if (ctx.param_count() > 0) {
        os << "params";
        for (const auto& name : ctx.param_names()) os << ' ' << name;
        os << '\n';
    }
    for (int i = 0; i < q.rank(); ++i)
        for (int j = 0; j < q.rank(); ++j) os << "entry " << i + 1 << ' ' << j + 1 << ' ' << q.at(i, j).to_string() << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------

UnitMonomial sym_product(const BraidingMatrix& q, int i, int j) { return q.at(i, j) * q.at(j, i); }

std::optional<int64_t> cartan_entry(const BraidingMatrix& q, int i, int j) {
    if (i == j) throw std::invalid_argument("cartan_entry needs i != j");
    return solve_power(q.at(i, i), sym_product(q, i, j)).greatest_nonpositive();
}

std::optional<CartanMatrix> is_cartan_type(const BraidingMatrix& q) {
    const int n = q.rank();
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                a(i, j) = 2;
                continue;
            }
            const auto e = cartan_entry(q, i, j);
            if (!e) return std::nullopt;
            a(i, j) = *e;
        }
    return CartanMatrix(std::move(a));
}

}  // namespace nichols
