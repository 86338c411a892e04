#include "hyperclass/lp.hpp"

#include <algorithm>

namespace hyperclass {

void InequalitySystem::add(std::vector<Rat> coef, Rel rel, Rat rhs) {
    if (static_cast<int>(coef.size()) != num_vars)
        throw InputError("constraint arity does not match num_vars");
    constraints.push_back({std::move(coef), rel, std::move(rhs)});
}

bool InequalitySystem::satisfied_by(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != num_vars) return false;
    for (const auto& c : this->constraints) {
        Rat lhs = 0;
        for (int i = 0; i < num_vars; ++i) lhs += c.coef[i] * x[i];
        switch (c.rel) {
        case Rel::Eq: if (lhs != c.rhs) return false; break;
        case Rel::Ge: if (lhs < c.rhs) return false; break;
        case Rel::Gt: if (lhs <= c.rhs) return false; break;
        case Rel::Le: if (lhs > c.rhs) return false; break;
        case Rel::Lt: if (lhs >= c.rhs) return false; break;
        }
    }
    return true;
}

namespace {

// Dense two-phase tableau simplex. Free variables are split x = u - v.
// Sizes in this project stay tiny (<= 13 variables, <= 50 rows), so a plain
// dense tableau with Bland's anti-cycling rule is the simplest exact choice.
class Simplex {
public:
    Simplex(int num_vars, const std::vector<LinConstraint>& constraints)
        : n_(num_vars) {
        for (const auto& c : constraints) {
            if (static_cast<int>(c.coef.size()) != n_)
                throw InputError("lp: constraint arity mismatch");
            std::vector<Rat> row(2 * n_);
            for (int i = 0; i < n_; ++i) {
                row[2 * i] = c.coef[i];
                row[2 * i + 1] = -c.coef[i];
            }
            Rat rhs = c.rhs;
            switch (c.rel) {
            case Rel::Eq: rows_.push_back({row, rhs, 0}); break;
            case Rel::Ge: rows_.push_back({row, rhs, -1}); break;
            case Rel::Le: rows_.push_back({row, rhs, +1}); break;
            default:
                throw InputError("lp: strict relation passed to lp_maximize");
            }
        }
    }

    LpResult maximize(const std::vector<Rat>& objective) {
        build_tableau();
        if (!phase_one()) return {LpStatus::Infeasible, {}, 0};
        std::vector<Rat> obj(cols_, Rat(0));
        for (int i = 0; i < n_; ++i) {
            obj[2 * i] = objective[i];
            obj[2 * i + 1] = -objective[i];
        }
        bool bounded = run(obj);
        if (!bounded) return {LpStatus::Unbounded, {}, 0};
        LpResult res;
        res.status = LpStatus::Optimal;
        res.point.assign(n_, Rat(0));
        std::vector<Rat> split(2 * n_, Rat(0));
        for (int r = 0; r < m_; ++r)
            if (basis_[r] < 2 * n_) split[basis_[r]] = tab_[r][cols_];
        for (int i = 0; i < n_; ++i) res.point[i] = split[2 * i] - split[2 * i + 1];
        res.value = 0;
        for (int i = 0; i < n_; ++i) res.value += objective[i] * res.point[i];
        return res;
    }

private:
    struct Row {
        std::vector<Rat> coef; // over split variables
        Rat rhs;
        int slack_sign; // -1 surplus, +1 slack, 0 none
    };

    void build_tableau() {
        m_ = static_cast<int>(rows_.size());
        int num_slacks = 0;
        for (auto& r : rows_)
            if (r.slack_sign != 0) ++num_slacks;
        // columns: split vars | slacks | artificials | rhs
        slack_base_ = 2 * n_;
        art_base_ = slack_base_ + num_slacks;
        cols_ = art_base_ + m_; // worst case: one artificial per row
        tab_.assign(m_, std::vector<Rat>(cols_ + 1, Rat(0)));
        basis_.assign(m_, -1);
        num_artificial_ = 0;
        int slack_idx = 0;
        for (int r = 0; r < m_; ++r) {
            Row& src = rows_[r];
            Rat sign = src.rhs < 0 ? Rat(-1) : Rat(1);
            for (int j = 0; j < 2 * n_; ++j) tab_[r][j] = sign * src.coef[j];
            tab_[r][cols_] = sign * src.rhs;
            if (src.slack_sign != 0) {
                int col = slack_base_ + slack_idx++;
                tab_[r][col] = sign * Rat(src.slack_sign);
                if (tab_[r][col] == 1) {
                    basis_[r] = col;
                    continue;
                }
            }
            int art = art_base_ + num_artificial_++;
            tab_[r][art] = 1;
            basis_[r] = art;
        }
    }

    // Returns false when the phase-1 optimum is nonzero (infeasible).
    bool phase_one() {
        if (num_artificial_ == 0) return true;
        std::vector<Rat> obj(cols_, Rat(0));
        for (int a = 0; a < num_artificial_; ++a) obj[art_base_ + a] = -1;
        run(obj); // bounded by construction (objective <= 0)
        Rat value = 0;
        for (int r = 0; r < m_; ++r)
            if (basis_[r] >= art_base_) value -= tab_[r][cols_];
        if (value != 0) return false;
        // Pivot leftover zero-level artificials out of the basis.
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < art_base_) continue;
            int col = -1;
            for (int j = 0; j < art_base_; ++j)
                if (tab_[r][j] != 0) { col = j; break; }
            if (col >= 0) pivot(r, col);
            // A fully zero row is a redundant constraint; its artificial stays
            // basic at level zero and never re-enters, which is harmless.
        }
        blocked_from_ = art_base_;
        return true;
    }

    // Bland's rule simplex on the current tableau; returns false if unbounded.
    bool run(const std::vector<Rat>& objective) {
        std::vector<Rat> red(cols_ + 1, Rat(0));
        while (true) {
            // reduced costs: objective - c_B . tableau
            for (int j = 0; j <= cols_; ++j) red[j] = j < cols_ ? objective[j] : Rat(0);
            for (int r = 0; r < m_; ++r) {
                const Rat& cb = objective[basis_[r]];
                if (cb == 0) continue;
                for (int j = 0; j <= cols_; ++j)
                    if (tab_[r][j] != 0) red[j] -= cb * tab_[r][j];
            }
            int enter = -1;
            for (int j = 0; j < std::min(cols_, blocked_from_); ++j)
                if (red[j] > 0) { enter = j; break; }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int r = 0; r < m_; ++r) {
                if (tab_[r][enter] <= 0) continue;
                Rat ratio = tab_[r][cols_] / tab_[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        Rat p = tab_[row][col];
        for (int j = 0; j <= cols_; ++j) tab_[row][j] /= p;
        for (int r = 0; r < m_; ++r) {
            if (r == row || tab_[r][col] == 0) continue;
            Rat f = tab_[r][col];
            for (int j = 0; j <= cols_; ++j)
                if (tab_[row][j] != 0) tab_[r][j] -= f * tab_[row][j];
        }
        basis_[row] = col;
    }

    int n_ = 0, m_ = 0, cols_ = 0;
    int slack_base_ = 0, art_base_ = 0, num_artificial_ = 0;
    int blocked_from_ = std::numeric_limits<int>::max();
    std::vector<Row> rows_;
    std::vector<std::vector<Rat>> tab_;
    std::vector<int> basis_;
};

} // namespace

LpResult lp_maximize(int num_vars, const std::vector<LinConstraint>& constraints,
                     const std::vector<Rat>& objective) {
    if (static_cast<int>(objective.size()) != num_vars)
        throw InputError("lp: objective arity mismatch");
    Simplex s(num_vars, constraints);
    return s.maximize(objective);
}

std::optional<std::vector<Rat>> solve_mixed_inequalities(const InequalitySystem& sys) {
    const int n = sys.num_vars;
    bool any_strict = false;
    std::vector<LinConstraint> relaxed;
    relaxed.reserve(sys.constraints.size() + 1);
    for (const auto& c : sys.constraints) {
        LinConstraint out;
        out.coef.assign(c.coef.begin(), c.coef.end());
        out.coef.push_back(Rat(0));
        out.rhs = c.rhs;
        switch (c.rel) {
        case Rel::Eq: out.rel = Rel::Eq; break;
        case Rel::Ge: out.rel = Rel::Ge; break;
        case Rel::Le: out.rel = Rel::Le; break;
        case Rel::Gt:
            out.rel = Rel::Ge;
            out.coef[n] = -1; // coef.x - eps >= rhs
            any_strict = true;
            break;
        case Rel::Lt:
            out.rel = Rel::Le;
            out.coef[n] = 1; // coef.x + eps <= rhs
            any_strict = true;
            break;
        }
        relaxed.push_back(std::move(out));
    }
    // 0 <= eps <= 1; maximize eps.
    {
        LinConstraint lo; lo.coef.assign(n + 1, Rat(0)); lo.coef[n] = 1; lo.rel = Rel::Ge; lo.rhs = 0;
        LinConstraint hi; hi.coef.assign(n + 1, Rat(0)); hi.coef[n] = 1; hi.rel = Rel::Le; hi.rhs = 1;
        relaxed.push_back(lo);
        relaxed.push_back(hi);
    }
    std::vector<Rat> obj(n + 1, Rat(0));
    obj[n] = 1;
    LpResult res = lp_maximize(n + 1, relaxed, obj);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    if (any_strict && res.value <= 0) return std::nullopt;
    std::vector<Rat> witness(res.point.begin(), res.point.begin() + n);
    if (!sys.satisfied_by(witness))
        throw Error("lp: witness failed exact re-evaluation"); // indicates a solver bug
    return witness;
}

} // namespace hyperclass
