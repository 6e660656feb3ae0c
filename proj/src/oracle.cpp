#include "nichols/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "nichols/errors.hpp"

namespace nichols {

IntVector word_degree(const Word& w, int rank) {
    IntVector d(static_cast<size_t>(rank), 0);
    for (int a : w) {
        if (a < 0 || a >= rank) throw IndexOutOfRange("letter out of range");
        ++d[size_t(a)];
    }
    return d;
}

// ---------------------------------------------------------------------------
// WordVector

WordVector WordVector::monomial(ContextPtr ctx, int rank, Word w) {
    WordVector v(ctx, rank);
    v.add(w, LaurentScalar::one(ctx));
    return v;
}

LaurentScalar WordVector::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentScalar::zero(ctx_) : it->second;
}

void WordVector::add(const Word& w, const LaurentScalar& c) {
    if (c.is_zero()) return;
    const IntVector d = word_degree(w, rank_);
    if (degree_ && *degree_ != d)
        throw DegreeMismatch("word of degree " + vector_to_string(d) + " added to a vector of degree " +
                             vector_to_string(*degree_));
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    degree_ = d;
    if (terms_.empty()) degree_.reset();
}

WordVector WordVector::operator-() const {
    WordVector out(ctx_, rank_);
    for (const auto& [w, c] : terms_) out.add(w, -c);
    return out;
}

WordVector operator+(const WordVector& a, const WordVector& b) {
    WordVector out = a;
    for (const auto& [w, c] : b.terms_) out.add(w, c);
    return out;
}

WordVector operator-(const WordVector& a, const WordVector& b) { return a + (-b); }

WordVector WordVector::scaled(const LaurentScalar& c) const {
    WordVector out(ctx_, rank_);
    for (const auto& [w, x] : terms_) out.add(w, x * c);
    return out;
}

WordVector WordVector::scaled(const UnitMonomial& u) const {
    WordVector out(ctx_, rank_);
    for (const auto& [w, x] : terms_) out.add(w, x.times(u));
    return out;
}

WordVector operator*(const WordVector& a, const WordVector& b) {
    require_same_context(a.ctx_, b.ctx_);
    WordVector out(a.ctx_, a.rank_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Braiding on words

namespace {

void check_position(const Word& w, int position) {
    if (position < 0 || position + 1 >= int(w.size()))
        throw IndexOutOfRange("swap position " + std::to_string(position) + " out of range for a word of length " +
                              std::to_string(w.size()));
}

// Inverses of all q_ij, looked up often.
struct InverseTable {
    explicit InverseTable(const BraidingMatrix& q) : n(q.rank()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) inv.push_back(q.at(i, j).inverse());
    }
    const UnitMonomial& operator()(int i, int j) const { return inv[size_t(i) * n + j]; }
    int n;
    std::vector<UnitMonomial> inv;
};

}  // namespace

WordVector braiding_inverse_swap(const BraidingMatrix& q, const Word& w, int position) {
    check_position(w, position);
    Word out = w;
    std::swap(out[size_t(position)], out[size_t(position) + 1]);
    WordVector v(q.context(), q.rank());
    v.add(out, LaurentScalar::embed(q.at(w[size_t(position) + 1], w[size_t(position)]).inverse()));
    return v;
}

WordVector braiding_inverse_swap(const BraidingMatrix& q, const WordVector& v, int position) {
    WordVector out(q.context(), q.rank());
    for (const auto& [w, c] : v.terms()) out = out + braiding_inverse_swap(q, w, position).scaled(c);
    return out;
}

WordVector braiding_swap(const BraidingMatrix& q, const WordVector& v, int position) {
    WordVector out(q.context(), q.rank());
    for (const auto& [w, c] : v.terms()) {
        check_position(w, position);
        Word s = w;
        std::swap(s[size_t(position)], s[size_t(position) + 1]);
        out.add(s, c.times(q.at(w[size_t(position)], w[size_t(position) + 1])));
    }
    return out;
}

std::vector<Word> block_basis(const IntVector& d) {
    Word w;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw std::invalid_argument("negative multidegree");
        w.insert(w.end(), size_t(d[i]), int(i));
    }
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

WordVector apply_symmetrizer(const BraidingMatrix& q, const WordVector& v) {
    if (v.is_zero()) return v;
    const InverseTable inv(q);
    const int m = int(v.terms().begin()->first.size());
    WordVector cur = v;
    // S_m = A_1 A_2 ... A_{m-1}; A_j applies S_{1,j} to the last j+1 letters.
    for (int j = m - 1; j >= 1; --j) {
        const size_t start = size_t(m - j - 1);
        WordVector next(q.context(), q.rank());
        for (const auto& [w, c] : cur.terms()) {
            for (int k = 0; k <= j; ++k) {
                // move b_k to the front of the suffix: prod_{l<k} q_{b_k b_l}^{-1}
                const int moved = w[start + size_t(k)];
                UnitMonomial coeff(q.context());
                for (int l = 0; l < k; ++l) coeff = coeff * inv(moved, w[start + size_t(l)]);
                Word out = w;
                std::rotate(out.begin() + long(start), out.begin() + long(start) + k, out.begin() + long(start) + k + 1);
                next.add(out, c.times(coeff));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Matrices and ranks

ScalarMatrix::ScalarMatrix(ContextPtr ctx, int rows, int cols)
    : rows_(rows), cols_(cols), data_(size_t(rows) * cols, LaurentScalar::zero(std::move(ctx))) {}

ScalarMatrix symmetrizer_block(const BraidingMatrix& q, const IntVector& d) {
    const auto basis = block_basis(d);
    std::map<Word, int> index;
    for (size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], int(k));
    ScalarMatrix m(q.context(), int(basis.size()), int(basis.size()));
    for (size_t col = 0; col < basis.size(); ++col) {
        const auto image = apply_symmetrizer(q, WordVector::monomial(q.context(), q.rank(), basis[col]));
        for (const auto& [w, c] : image.terms()) m(index.at(w), int(col)) = c;
    }
    return m;
}

int64_t matrix_rank(ScalarMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    const ContextPtr ctx = m(0, 0).context();
    LaurentScalar previous = LaurentScalar::one(ctx);
    int k = 0;
    for (; k < std::min(rows, cols); ++k) {
        int pr = -1, pc = -1;
        for (int r = k; r < rows; ++r)
            for (int c = k; c < cols; ++c) {
                const auto& x = m(r, c);
                if (x.is_zero()) continue;
                if (pr < 0 || x.term_count() < m(pr, pc).term_count() ||
                    (x.term_count() == m(pr, pc).term_count() && x.total_degree() < m(pr, pc).total_degree()))
                    pr = r, pc = c;
            }
        if (pr < 0) break;
        if (pr != k)
            for (int c = 0; c < cols; ++c) std::swap(m(k, c), m(pr, c));
        if (pc != k)
            for (int r = 0; r < rows; ++r) std::swap(m(r, k), m(r, pc));
        const LaurentScalar pivot = m(k, k);
        for (int r = k + 1; r < rows; ++r) {
            const LaurentScalar lead = m(r, k);
            for (int c = k + 1; c < cols; ++c) {
                LaurentScalar x = pivot * m(r, c);
                if (!lead.is_zero()) x -= lead * m(k, c);
                m(r, c) = exact_divide(x, previous);
            }
            m(r, k) = LaurentScalar::zero(ctx);
        }
        previous = pivot;
    }
    return k;
}

int64_t graded_dimension(const BraidingMatrix& q, const IntVector& d) {
    if (int(d.size()) != q.rank()) throw DegreeMismatch("multidegree has wrong length");
    if (total_degree(d) == 0) return 1;
    return matrix_rank(symmetrizer_block(q, d));
}

HilbertTable hilbert_data(const BraidingMatrix& q, int max_degree, int threads) {
    const int n = q.rank();
    std::vector<IntVector> degrees;
    IntVector d(static_cast<size_t>(n), 0);
    for (;;) {
        degrees.push_back(d);
        // next vector with total degree <= max_degree
        int k = 0;
        while (k < n) {
            ++d[size_t(k)];
            if (total_degree(d) <= max_degree) break;
            d[size_t(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::vector<int64_t> dims(degrees.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k = next++; k < degrees.size(); k = next++) dims[k] = graded_dimension(q, degrees[k]);
    };
    const int workers = std::max(1, threads);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_lock;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_lock);
                    if (!failure) failure = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    HilbertTable table;
    for (size_t k = 0; k < degrees.size(); ++k) table.emplace(degrees[k], dims[k]);
    return table;
}

// ---------------------------------------------------------------------------
// PBW inference

namespace {

struct Occurrence {
    IntVector root;
    std::optional<int64_t> height;
};

// Multiplies a truncated series by 1 - z^shift or by 1/(1 - z^shift).
void multiply_series(HilbertTable& series, const IntVector& shift, bool geometric, int max_degree) {
    std::vector<IntVector> keys;
    for (const auto& [d, c] : series) keys.push_back(d);
    std::sort(keys.begin(), keys.end(), graded_lex_less);
    auto plus = [&](const IntVector& a) {
        IntVector s = a;
        for (size_t k = 0; k < s.size(); ++k) s[k] += shift[k];
        return s;
    };
    if (geometric) {
        // ascending order so that already-updated lower terms propagate
        for (const auto& d : keys) {
            const IntVector s = plus(d);
            if (total_degree(s) > max_degree) continue;
            series[s] += series[d];
        }
    } else {
        for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
            const IntVector s = plus(*it);
            if (total_degree(s) > max_degree) continue;
            series[s] -= series[*it];
        }
    }
}

}  // namespace

std::vector<PbwDatum> pbw_infer(const HilbertTable& table, int rank, int max_degree) {
    std::vector<IntVector> degrees;
    for (const auto& [d, c] : table)
        if (int(d.size()) == rank && total_degree(d) >= 1 && total_degree(d) <= max_degree) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end(), graded_lex_less);

    HilbertTable series;
    series[IntVector(static_cast<size_t>(rank), 0)] = 1;
    for (const auto& d : degrees) series.try_emplace(d, 0);

    std::vector<Occurrence> found;
    for (const auto& d : degrees) {
        const int64_t delta = table.at(d) - series.at(d);
        if (delta > 0) {
            for (int64_t k = 0; k < delta; ++k) {
                found.push_back({d, std::nullopt});
                multiply_series(series, d, true, max_degree);
            }
        } else if (delta < 0) {
            // open roots beta with d = k beta, k >= 2; truncating one at height k lowers the coefficient by 1
            std::vector<std::pair<size_t, int64_t>> candidates;
            for (size_t o = 0; o < found.size(); ++o) {
                if (found[o].height) continue;
                const auto& beta = found[o].root;
                std::optional<int64_t> factor;
                bool multiple = true;
                for (size_t k = 0; k < d.size() && multiple; ++k) {
                    if (beta[k] == 0) {
                        multiple = d[k] == 0;
                        continue;
                    }
                    if (d[k] % beta[k] != 0) multiple = false;
                    else if (!factor) factor = d[k] / beta[k];
                    else multiple = *factor == d[k] / beta[k];
                }
                if (multiple && factor && *factor >= 2) candidates.emplace_back(o, *factor);
            }
            const auto needed = size_t(-delta);
            if (needed > candidates.size())
                throw NegativeDiscrepancy("Hilbert series cannot be factored at degree " + vector_to_string(d) +
                                          "; raise the cutoff");
            if (needed < candidates.size()) {
                std::set<IntVector> distinct;
                for (const auto& [o, k] : candidates) distinct.insert(found[o].root);
                if (distinct.size() > 1)
                    throw AmbiguousFactorization("two factorisations fit at degree " + vector_to_string(d) +
                                                 " within cutoff " + std::to_string(max_degree));
            }
            for (size_t c = 0; c < needed; ++c) {
                auto [o, k] = candidates[c];
                found[o].height = k;
                multiply_series(series, d, false, max_degree);
            }
        }
    }

    std::map<std::pair<IntVector, std::optional<int64_t>>, int64_t> grouped;
    for (const auto& occ : found) ++grouped[{occ.root, occ.height}];
    std::vector<PbwDatum> out;
    for (const auto& [key, count] : grouped) {
        PbwDatum datum;
        datum.root = key.first;
        datum.multiplicity = count;
        datum.height = key.second;
        if (!datum.height) datum.height_bound = max_degree / total_degree(key.first) + 1;
        out.push_back(std::move(datum));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const PbwDatum& a, const PbwDatum& b) { return graded_lex_less(a.root, b.root); });
    return out;
}

// ---------------------------------------------------------------------------
// Adjoint action, derivations, pairing

WordVector ad_power(const BraidingMatrix& q, int i, int j, int64_t m) {
    if (m < 0) throw std::invalid_argument("ad power must be nonnegative");
    const auto ctx = q.context();
    const int n = q.rank();
    const WordVector xi = WordVector::letter(ctx, n, i);
    WordVector cur = WordVector::letter(ctx, n, j);
    for (int64_t step = 0; step < m; ++step) {
        if (cur.is_zero()) break;
        const IntVector d = *cur.degree();
        UnitMonomial g(ctx);
        for (int l = 0; l < n; ++l) g = g * q.at(i, l).pow(d[size_t(l)]);
        cur = xi * cur - (cur * xi).scaled(g);
    }
    return cur;
}

WordVector skew_diff(const BraidingMatrix& q, Side side, int i, const WordVector& v) {
    if (i < 0 || i >= q.rank()) throw IndexOutOfRange("derivation index out of range");
    const InverseTable inv(q);
    WordVector out(q.context(), q.rank());
    for (const auto& [w, c] : v.terms()) {
        for (size_t p = 0; p < w.size(); ++p) {
            if (w[p] != i) continue;
            UnitMonomial factor(q.context());
            if (side == Side::Left) {
                for (size_t l = 0; l < p; ++l) factor = factor * inv(i, w[l]);
            } else {
                for (size_t l = p + 1; l < w.size(); ++l) factor = factor * inv(w[l], i);
            }
            Word rest = w;
            rest.erase(rest.begin() + long(p));
            out.add(rest, c.times(factor));
        }
    }
    return out;
}

namespace {

LaurentScalar word_pairing(const BraidingMatrix& q, const Word& u, const WordVector& v) {
    WordVector cur = v;
    for (auto it = u.rbegin(); it != u.rend() && !cur.is_zero(); ++it) cur = skew_diff(q, Side::Left, *it, cur);
    return cur.coefficient(Word{});
}

}  // namespace

LaurentScalar pairing(const BraidingMatrix& q, const WordVector& u, const WordVector& v) {
    if (u.degree() && v.degree() && *u.degree() != *v.degree())
        throw DegreeMismatch("pairing needs equal multidegrees, got " + vector_to_string(*u.degree()) + " and " +
                             vector_to_string(*v.degree()));
    LaurentScalar total = LaurentScalar::zero(q.context());
    for (const auto& [w, c] : u.terms()) total += c * word_pairing(q, w, v);
    return total;
}

ScalarMatrix pairing_matrix(const BraidingMatrix& q, const IntVector& d) {
    const auto basis = block_basis(d);
    ScalarMatrix m(q.context(), int(basis.size()), int(basis.size()));
    for (size_t r = 0; r < basis.size(); ++r)
        for (size_t c = 0; c < basis.size(); ++c)
            m(int(r), int(c)) = word_pairing(q, basis[r], WordVector::monomial(q.context(), q.rank(), basis[c]));
    return m;
}

}  // namespace nichols
