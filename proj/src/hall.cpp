#include "milnorkit/hall.hpp"

#include "milnorkit/errors.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace milnorkit {

namespace {

using int128 = __int128;

long long checked_cast(int128 v, const char* what) {
    if (v > int128(0x7fffffffffffffffLL) || v < -int128(0x7fffffffffffffffLL))
        throw InternalError(std::string("integer overflow in ") + what);
    return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact rational with int64 storage; throws on overflow instead of wrapping.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n) {}
    Frac(int128 n, int128 d) {
        if (d == 0) throw InternalError("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num = checked_cast(n, "fraction");
        den = checked_cast(d, "fraction");
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
};

Frac operator+(const Frac& a, const Frac& b) {
    return Frac(int128(a.num) * b.den + int128(b.num) * a.den, int128(a.den) * b.den);
}
Frac operator-(const Frac& a, const Frac& b) {
    return Frac(int128(a.num) * b.den - int128(b.num) * a.den, int128(a.den) * b.den);
}
Frac operator*(const Frac& a, const Frac& b) {
    return Frac(int128(a.num) * b.num, int128(a.den) * b.den);
}
Frac operator/(const Frac& a, const Frac& b) {
    if (b.num == 0) throw InternalError("division by zero fraction");
    return Frac(int128(a.num) * b.den, int128(a.den) * b.num);
}

long long ipow(int base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Dense integer coefficient table for noncommutative monomials of degree
// 0..budget over `rank` variables. deg[d] has rank^d entries; the monomial
// X_{i1}..X_{id} sits at mixed-radix index sum (i_t - 1) * rank^(d-t).
struct Graded {
    int rank = 1;
    int budget = 0;
    std::vector<std::vector<long long>> deg;

    static Graded one(int rank, int budget) {
        Graded g;
        g.rank = rank;
        g.budget = budget;
        g.deg.resize(static_cast<std::size_t>(budget) + 1);
        for (int d = 0; d <= budget; ++d)
            g.deg[static_cast<std::size_t>(d)].assign(
                static_cast<std::size_t>(ipow(rank, d)), 0);
        g.deg[0][0] = 1;
        return g;
    }

    // Right-multiply in place by the expansion of one letter:
    // +g -> 1 + X_g, -g -> 1 - X_g + X_g^2 - ...
    void mul_letter(int letter) {
        const int g = std::abs(letter) - 1;
        if (letter > 0) {
            for (int d = budget; d >= 1; --d) {
                auto& lo = deg[static_cast<std::size_t>(d - 1)];
                auto& hi = deg[static_cast<std::size_t>(d)];
                const std::size_t n = lo.size();
                for (std::size_t i = 0; i < n; ++i)
                    if (lo[i] != 0) hi[i * static_cast<std::size_t>(rank) +
                                       static_cast<std::size_t>(g)] += lo[i];
            }
        } else {
            std::vector<std::vector<long long>> out = deg;
            long long sign = -1;
            std::size_t tail = static_cast<std::size_t>(g); // index of X_g^t, built up
            long long radix = static_cast<long long>(rank);
            for (int t = 1; t <= budget; ++t) {
                for (int d = t; d <= budget; ++d) {
                    auto& src = deg[static_cast<std::size_t>(d - t)];
                    auto& dst = out[static_cast<std::size_t>(d)];
                    const std::size_t shift = static_cast<std::size_t>(ipow(rank, t));
                    const std::size_t n = src.size();
                    for (std::size_t i = 0; i < n; ++i)
                        if (src[i] != 0) dst[i * shift + tail] += sign * src[i];
                }
                sign = -sign;
                tail = tail * static_cast<std::size_t>(radix) + static_cast<std::size_t>(g);
            }
            deg = std::move(out);
        }
    }

    static Graded from_word(const FreeWord& w, int budget) {
        Graded g = one(w.rank(), budget);
        for (int letter : w.letters()) g.mul_letter(letter);
        return g;
    }

    friend Graded mul(const Graded& a, const Graded& b) {
        if (a.rank != b.rank || a.budget != b.budget)
            throw InternalError("graded table shape mismatch");
        Graded out = one(a.rank, a.budget);
        out.deg[0][0] = 0;
        for (int da = 0; da <= a.budget; ++da) {
            const auto& va = a.deg[static_cast<std::size_t>(da)];
            for (int db = 0; da + db <= a.budget; ++db) {
                const auto& vb = b.deg[static_cast<std::size_t>(db)];
                auto& vo = out.deg[static_cast<std::size_t>(da + db)];
                const std::size_t stride = vb.size();
                for (std::size_t i = 0; i < va.size(); ++i) {
                    if (va[i] == 0) continue;
                    const long long ca = va[i];
                    for (std::size_t j = 0; j < stride; ++j)
                        if (vb[j] != 0) vo[i * stride + j] += ca * vb[j];
                }
            }
        }
        return out;
    }

    friend Graded pow(Graded base, long long e) {
        Graded out = one(base.rank, base.budget);
        while (e > 0) {
            if (e & 1) out = mul(out, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return out;
    }

    bool degree_vanishes(int d) const {
        for (long long c : deg[static_cast<std::size_t>(d)])
            if (c != 0) return false;
        return true;
    }
};

// Tensor expansion of the Lie bracket tree of a basis entry: leaves map to
// unit vectors, [u,v] to uv - vu under concatenation.
std::vector<long long> lie_vector(const HallBasis& basis, int index,
                                  std::vector<std::vector<long long>>& memo) {
    auto& slot = memo[static_cast<std::size_t>(index)];
    if (!slot.empty()) return slot;
    const HallEntry& e = basis.entry(index);
    const int m = basis.rank();
    if (e.generator > 0) {
        slot.assign(static_cast<std::size_t>(m), 0);
        slot[static_cast<std::size_t>(e.generator - 1)] = 1;
        return slot;
    }
    const auto lv = lie_vector(basis, e.left, memo);
    const auto rv = lie_vector(basis, e.right, memo);
    slot.assign(lv.size() * rv.size(), 0);
    for (std::size_t i = 0; i < lv.size(); ++i) {
        if (lv[i] == 0) continue;
        for (std::size_t j = 0; j < rv.size(); ++j)
            if (rv[j] != 0) slot[i * rv.size() + j] += lv[i] * rv[j];
    }
    for (std::size_t j = 0; j < rv.size(); ++j) {
        if (rv[j] == 0) continue;
        for (std::size_t i = 0; i < lv.size(); ++i)
            if (lv[i] != 0) slot[j * lv.size() + i] -= rv[j] * lv[i];
    }
    return slot;
}

// Solves B e = v for the weight-k coordinate vector, where the columns of B
// are the tensor expansions of the weight-k basis entries. The solution is
// verified against every row, so a residual that is not in the Lie span
// (which would mean a broken invariant upstream) fails loudly.
struct LieSolver {
    int rows = 0;
    std::vector<std::vector<long long>> cols;   // full columns, size witt
    std::vector<int> pivot_rows;                // witt selected rows
    std::vector<std::vector<Frac>> inverse;     // witt x witt

    LieSolver(const HallBasis& basis, int k) {
        const int m = basis.rank();
        rows = static_cast<int>(ipow(m, k));
        std::vector<std::vector<long long>> memo(
            static_cast<std::size_t>(basis.size()));
        std::vector<int> members;
        for (int i = 0; i < basis.size(); ++i)
            if (basis.weight_of(i) == k) {
                cols.push_back(lie_vector(basis, i, memo));
                members.push_back(i);
            }
        const std::size_t witt = cols.size();

        // Greedy row selection by elimination on a working copy.
        std::vector<std::vector<Frac>> work(witt, std::vector<Frac>(static_cast<std::size_t>(rows)));
        for (std::size_t j = 0; j < witt; ++j)
            for (int r = 0; r < rows; ++r)
                work[j][static_cast<std::size_t>(r)] = Frac(cols[j][static_cast<std::size_t>(r)]);
        std::vector<bool> used(static_cast<std::size_t>(rows), false);
        for (std::size_t j = 0; j < witt; ++j) {
            int pivot = -1;
            for (int r = 0; r < rows; ++r)
                if (!used[static_cast<std::size_t>(r)] &&
                    !work[j][static_cast<std::size_t>(r)].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                throw InternalError("hall basis weight-" + std::to_string(k) +
                                    " expansions are not independent");
            used[static_cast<std::size_t>(pivot)] = true;
            pivot_rows.push_back(pivot);
            const Frac p = work[j][static_cast<std::size_t>(pivot)];
            for (std::size_t j2 = j + 1; j2 < witt; ++j2) {
                const Frac f = work[j2][static_cast<std::size_t>(pivot)] / p;
                if (f.is_zero()) continue;
                for (int r = 0; r < rows; ++r)
                    work[j2][static_cast<std::size_t>(r)] =
                        work[j2][static_cast<std::size_t>(r)] -
                        f * work[j][static_cast<std::size_t>(r)];
            }
        }

        // Invert the square submatrix S with S[r][j] = cols[j][pivot_rows[r]].
        std::vector<std::vector<Frac>> a(witt, std::vector<Frac>(2 * witt));
        for (std::size_t r = 0; r < witt; ++r) {
            for (std::size_t j = 0; j < witt; ++j)
                a[r][j] = Frac(cols[j][static_cast<std::size_t>(pivot_rows[r])]);
            a[r][witt + r] = Frac(1);
        }
        for (std::size_t col = 0; col < witt; ++col) {
            std::size_t pivot = col;
            while (pivot < witt && a[pivot][col].is_zero()) ++pivot;
            if (pivot == witt) throw InternalError("singular hall coordinate system");
            std::swap(a[pivot], a[col]);
            const Frac p = a[col][col];
            for (std::size_t j = 0; j < 2 * witt; ++j) a[col][j] = a[col][j] / p;
            for (std::size_t r = 0; r < witt; ++r) {
                if (r == col || a[r][col].is_zero()) continue;
                const Frac f = a[r][col];
                for (std::size_t j = 0; j < 2 * witt; ++j)
                    a[r][j] = a[r][j] - f * a[col][j];
            }
        }
        inverse.assign(witt, std::vector<Frac>(witt));
        for (std::size_t r = 0; r < witt; ++r)
            for (std::size_t j = 0; j < witt; ++j) inverse[r][j] = a[r][witt + j];
    }

    std::vector<long long> solve(const std::vector<long long>& v) const {
        const std::size_t witt = cols.size();
        std::vector<long long> e(witt, 0);
        for (std::size_t i = 0; i < witt; ++i) {
            Frac acc(0);
            for (std::size_t j = 0; j < witt; ++j)
                acc = acc + inverse[i][j] * Frac(v[static_cast<std::size_t>(pivot_rows[j])]);
            if (!acc.is_integer())
                throw InternalError("non-integer hall coordinate");
            e[i] = acc.num;
        }
        for (int r = 0; r < rows; ++r) {
            int128 acc = 0;
            for (std::size_t j = 0; j < witt; ++j)
                acc += int128(cols[j][static_cast<std::size_t>(r)]) * e[j];
            if (acc != int128(v[static_cast<std::size_t>(r)]))
                throw InternalError("residual is not in the free Lie span");
        }
        return e;
    }
};

const LieSolver& solver_for(const HallBasis& basis, int k) {
    static std::map<std::pair<std::pair<int, int>, int>, LieSolver> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_pair(std::make_pair(basis.rank(), basis.klass()), k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, LieSolver(basis, k)).first;
    return it->second;
}

void check_budget(int rank, int klass) {
    if (ipow(rank, klass) > 2000000)
        throw DegreeOverflow("rank " + std::to_string(rank) + " at class " +
                             std::to_string(klass) + " exceeds the monomial budget");
}

} // namespace

long long HallBasis::witt_number(int rank, int weight) {
    // W(m,k) = (1/k) sum_{d | k} mobius(d) m^{k/d}
    long long total = 0;
    for (int d = 1; d <= weight; ++d) {
        if (weight % d != 0) continue;
        int x = d, mob = 1;
        for (int p = 2; p * p <= x; ++p) {
            if (x % p != 0) continue;
            x /= p;
            if (x % p == 0) {
                mob = 0;
                break;
            }
            mob = -mob;
        }
        if (mob == 0) continue;
        if (x > 1) mob = -mob;
        total += mob * ipow(rank, weight / d);
    }
    return total / weight;
}

HallBasis::HallBasis(int rank, int klass) : rank_(rank), klass_(klass) {
    for (int g = 1; g <= rank; ++g) {
        entries_.push_back(HallEntry{1, -1, -1, g});
        words_.emplace_back(rank, std::vector<int>{g});
    }
    // key(e): index of the classical right child, used in the Hall condition.
    auto key = [this](int i) {
        const HallEntry& e = entries_[static_cast<std::size_t>(i)];
        return e.generator > 0 ? i : std::min(e.left, e.right);
    };
    for (int w = 2; w <= klass; ++w) {
        const int before = static_cast<int>(entries_.size());
        for (int a = 0; a < before; ++a) {
            const int wa = entries_[static_cast<std::size_t>(a)].weight;
            if (wa >= w) break;
            for (int b = 0; b < a; ++b) {
                const int wb = entries_[static_cast<std::size_t>(b)].weight;
                if (wa + wb != w) continue;
                if (entries_[static_cast<std::size_t>(a)].generator == 0 && b < key(a))
                    continue;
                // Display orientation: lighter-or-smaller child on the left.
                const int left = wa == wb ? b : a;
                const int right = wa == wb ? a : b;
                entries_.push_back(HallEntry{w, left, right, 0});
                words_.push_back(commutator(words_[static_cast<std::size_t>(left)],
                                            words_[static_cast<std::size_t>(right)]));
            }
        }
        const long long count = static_cast<int>(entries_.size()) - before;
        if (count != witt_number(rank, w))
            throw InternalError("hall basis weight-" + std::to_string(w) +
                                " count " + std::to_string(count) +
                                " disagrees with the Witt number");
    }
}

const HallBasis& HallBasis::get(int rank, int klass, const Limits& limits) {
    if (rank < 1) throw IndexError("hall basis rank must be >= 1");
    check_class(klass, limits);
    check_budget(rank, klass);
    static std::map<std::pair<int, int>, HallBasis> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    const auto k = std::make_pair(rank, klass);
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, HallBasis(rank, klass)).first;
    return it->second;
}

std::string HallBasis::label(int i) const {
    const HallEntry& e = entries_[static_cast<std::size_t>(i)];
    if (e.generator > 0) return "x" + std::to_string(e.generator);
    return "[" + label(e.left) + "," + label(e.right) + "]";
}

std::string HallBasis::dump() const {
    std::ostringstream out;
    for (int i = 0; i < size(); ++i)
        out << "w=" << weight_of(i) << ' ' << label(i) << '\n';
    return out.str();
}

bool NilpotentCoordinates::vanishes_below(int weight) const {
    const HallBasis& basis = HallBasis::get(rank, klass);
    for (int i = 0; i < basis.size(); ++i)
        if (basis.weight_of(i) < weight && exponents[static_cast<std::size_t>(i)] != 0)
            return false;
    return true;
}

NilpotentCoordinates collect(const FreeWord& w, int klass, const Limits& limits) {
    check_class(klass, limits);
    check_budget(w.rank(), klass);
    const HallBasis& basis = HallBasis::get(w.rank(), klass, limits);

    NilpotentCoordinates coords;
    coords.rank = w.rank();
    coords.klass = klass;
    coords.exponents.assign(static_cast<std::size_t>(basis.size()), 0);

    // Strip one weight at a time: read the leading coefficients of the
    // residual, divide off the matching product of basic commutators, repeat.
    // The residual is carried as its coefficient table, never as a word.
    Graded residual = Graded::from_word(w, klass);
    for (int k = 1; k <= klass; ++k) {
        for (int d = 1; d < k; ++d)
            if (!residual.degree_vanishes(d))
                throw InternalError("residual left the expected filtration step");
        const auto& solver = solver_for(basis, k);
        const auto e = solver.solve(residual.deg[static_cast<std::size_t>(k)]);
        std::size_t pos = 0;
        Graded divisor = Graded::one(w.rank(), klass);
        for (int i = 0; i < basis.size(); ++i) {
            if (basis.weight_of(i) != k) continue;
            const long long exponent = e[pos++];
            coords.exponents[static_cast<std::size_t>(i)] = exponent;
            if (exponent == 0 || k == klass) continue;
            const FreeWord piece =
                exponent > 0 ? inverse(basis.word(i)) : basis.word(i);
            Graded factor = Graded::from_word(piece, klass);
            divisor = mul(pow(std::move(factor), std::llabs(exponent)), divisor);
        }
        if (k < klass) residual = mul(divisor, residual);
    }
    return coords;
}

FreeWord normal_form_word(const NilpotentCoordinates& coords) {
    const HallBasis& basis = HallBasis::get(coords.rank, coords.klass);
    FreeWord out(coords.rank);
    for (int i = 0; i < basis.size(); ++i) {
        const long long e = coords.exponents[static_cast<std::size_t>(i)];
        if (e != 0) out = concat(out, power(basis.word(i), e));
    }
    return out;
}

bool in_lcs(const FreeWord& w, int k, const Limits& limits) {
    check_class(k, limits);
    if (k == 1) return true;
    return collect(w, k - 1, limits).vanishes_below(k);
}

} // namespace milnorkit
