#include "sstk/diff_form.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace sstk {

DiffForm::DiffForm(Chart chart, int degree) : chart_(std::move(chart)), deg_(degree)
{
    if (degree < 0 || degree > chart_.dim())
        throw ChartError("form degree out of range for chart " + chart_.name());
}

DiffForm DiffForm::scalar(const Chart& c, const SymExpr& f)
{
    DiffForm r(c, 0);
    if (!f.is_zero()) r.c_[{}] = f;
    return r;
}

DiffForm DiffForm::canonical(const Chart& c)
{
    if (c.dim() % 2 != 0) throw ChartError("canonical form needs even dimension");
    DiffForm r(c, 2);
    int n = c.dim() / 2;
    for (int i = 0; i < n; ++i) r.add_term({i, i + n}, SymExpr(1));
    return r;
}

void DiffForm::add_term(std::vector<int> idx, const SymExpr& c)
{
    if ((int)idx.size() != deg_) throw ChartError("index tuple length != form degree");
    if (c.is_zero()) return;
    // Insertion sort, counting swaps for the sign; repeated index kills the term.
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return;
    for (int k : idx)
        if (k < 0 || k >= chart_.dim()) throw ChartError("index out of range");
    SymExpr v = sign > 0 ? c : -c;
    auto it = c_.find(idx);
    if (it == c_.end()) {
        c_.emplace(std::move(idx), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

const SymExpr* DiffForm::coeff(const std::vector<int>& idx) const
{
    auto it = c_.find(idx);
    return it == c_.end() ? nullptr : &it->second;
}

DiffForm DiffForm::operator+(const DiffForm& o) const
{
    if (!(chart_ == o.chart_) || deg_ != o.deg_) throw ChartError("form addition mismatch");
    DiffForm r = *this;
    for (const auto& [i, c] : o.c_) r.add_term(i, c);
    return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const
{
    if (!(chart_ == o.chart_) || deg_ != o.deg_) throw ChartError("form subtraction mismatch");
    DiffForm r = *this;
    for (const auto& [i, c] : o.c_) r.add_term(i, -c);
    return r;
}

DiffForm DiffForm::times(const SymExpr& f) const
{
    DiffForm r(chart_, deg_);
    if (f.is_zero()) return r;
    for (const auto& [i, c] : c_) r.add_term(i, c * f);
    return r;
}

DiffForm DiffForm::wedge(const DiffForm& o) const
{
    if (!(chart_ == o.chart_)) throw ChartError("wedge: chart mismatch");
    if (deg_ + o.deg_ > chart_.dim())
        throw ChartError("wedge: degree exceeds chart dimension");
    DiffForm r(chart_, deg_ + o.deg_);
    for (const auto& [ia, ca] : c_) {
        for (const auto& [ib, cb] : o.c_) {
            std::vector<int> idx;
            idx.reserve(ia.size() + ib.size());
            idx.insert(idx.end(), ia.begin(), ia.end());
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    }
    return r;
}

DiffForm DiffForm::ext_deriv() const
{
    DiffForm r(chart_, deg_ + 1);
    for (const auto& [idx, c] : c_) {
        for (int j = 0; j < chart_.dim(); ++j) {
            SymExpr dj = chart_.d_coord(c, j);
            if (dj.is_zero()) continue;
            std::vector<int> nidx;
            nidx.reserve(idx.size() + 1);
            nidx.push_back(j);
            nidx.insert(nidx.end(), idx.begin(), idx.end());
            r.add_term(std::move(nidx), dj);
        }
    }
    return r;
}

namespace {

// Pfaffian of an antisymmetric SymExpr matrix given by its upper entries,
// expanded along the lowest live index with memoization on the index mask.
struct PfaffianCtx {
    int dim;
    const std::map<std::pair<int, int>, SymExpr>& entries;
    std::unordered_map<uint32_t, SymExpr> memo;

    const SymExpr* entry(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? nullptr : &it->second;
    }

    SymExpr pf(uint32_t mask)
    {
        if (mask == 0) return SymExpr(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int first = -1;
        for (int i = 0; i < dim; ++i)
            if (mask & (1u << i)) {
                first = i;
                break;
            }
        SymExpr acc;
        int t = 0; // position of j among live indices after `first`
        for (int j = first + 1; j < dim; ++j) {
            if (!(mask & (1u << j))) continue;
            ++t;
            const SymExpr* a = entry(first, j);
            if (!a) continue;
            uint32_t sub = mask & ~(1u << first) & ~(1u << j);
            SymExpr term = *a * pf(sub);
            acc += (t % 2 == 1) ? term : -term;
        }
        memo.emplace(mask, acc);
        return acc;
    }
};

Rat factorial(int n)
{
    Rat r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

SymExpr DiffForm::top_power_coeff() const
{
    if (deg_ != 2) throw ChartError("top_power: form must have degree 2");
    int d = chart_.dim();
    if (d % 2 != 0) throw ChartError("top_power: odd-dimensional chart");
    if (d > 30) throw ChartError("top_power: chart dimension too large");
    int n = d / 2;
    std::map<std::pair<int, int>, SymExpr> entries;
    for (const auto& [idx, c] : c_) entries[{idx[0], idx[1]}] = c;
    PfaffianCtx ctx{d, entries, {}};
    uint32_t full = (1u << d) - 1;
    SymExpr pf = ctx.pf(full);
    // Measured against the canonical pairing volume (dx_0^dx_n)^(dx_1^dx_{n+1})...,
    // which differs from the ascending volume by (-1)^{n(n-1)/2}; the canonical
    // form then gives exactly n! in every dimension.
    Rat norm = factorial(n);
    if ((n * (n - 1) / 2) % 2 != 0) norm = -norm;
    return pf * SymExpr(norm);
}

Eigen::MatrixXd DiffForm::eval_matrix(const std::map<std::string, double>& env) const
{
    if (deg_ != 2) throw ChartError("eval_matrix: form must have degree 2");
    int d = chart_.dim();
    std::map<std::string, double> full = env;
    chart_.complete_env(full);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(d, d);
    for (const auto& [idx, c] : c_) {
        double v = c.eval(full);
        M(idx[0], idx[1]) = v;
        M(idx[1], idx[0]) = -v;
    }
    return M;
}

bool DiffForm::equals(const DiffForm& o) const
{
    if (!(chart_ == o.chart_) || deg_ != o.deg_) return false;
    return (*this - o).is_zero();
}

std::optional<Rat> DiffForm::constant_multiple_of(const DiffForm& o) const
{
    if (!(chart_ == o.chart_) || deg_ != o.deg_) return std::nullopt;
    if (c_.empty() || o.c_.empty()) return std::nullopt;
    auto it = c_.begin();
    const SymExpr* ref = o.coeff(it->first);
    if (!ref) return std::nullopt;
    auto ratio = it->second.constant_multiple_of(*ref);
    if (!ratio) return std::nullopt;
    if (!equals(o.times(SymExpr(*ratio)))) return std::nullopt;
    return ratio;
}

std::string DiffForm::str() const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k : idx) os << " d" << chart_.var(k).name;
    }
    return os.str();
}

} // namespace sstk
