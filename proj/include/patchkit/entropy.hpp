#pragma once

#include "patchkit/represent.hpp"
#include "patchkit/windows.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace patchkit {

inline double ln_big(const BigInt& n) {
    if (n <= 0) throw internal_error("log of a nonpositive count");
    if (n < (BigInt(1) << 900)) return std::log(n.convert_to<double>());
    std::size_t shift = boost::multiprecision::msb(n) - 512;
    BigInt m = n >> shift;
    return std::log(m.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

/// Closed-form exact patch count for structurally transparent instances.
/// For the word set over a window whose integer and half-integer slots form
/// consecutive runs, the patch classes are the two anchor families:
///   2^(islots - [0 is a slot]) + 2^(hslots) - 1,
/// the -1 merging the two all-full patterns. Validated against exhaustive
/// enumeration in the test suite.
inline std::optional<BigInt> structural_pat_count(const PointSetOracle& omega, const Region& a) {
    switch (omega.tag()) {
        case StructureTag::lattice:
            return BigInt(1);
        case StructureTag::word_set: {
            auto islots = detail::integer_points(a);
            auto hslots = detail::half_integer_points(a);
            if (!detail::consecutive(islots) || !detail::consecutive(hslots)) return std::nullopt;
            bool zero_slot = std::binary_search(islots.begin(), islots.end(), BigInt(0));
            if (islots.size() > 4000 || hslots.size() > 4000) return std::nullopt;
            unsigned si = static_cast<unsigned>(islots.size());
            unsigned sh = static_cast<unsigned>(hslots.size());
            BigInt ints = BigInt(1) << (si - (zero_slot ? 1 : 0));
            if (si == 0) ints = 1;
            BigInt halves = BigInt(1) << sh;
            return ints + halves - 1;
        }
        default:
            return std::nullopt;
    }
}

enum class EntropyMode { exact_pat, scale_pat };

enum class CountMethod { enumerated, structural, cover };

inline const char* to_string(CountMethod m) {
    switch (m) {
        case CountMethod::enumerated: return "enumerated";
        case CountMethod::structural: return "structural";
        case CountMethod::cover: return "cover";
    }
    return "?";
}

struct EntropyRow {
    long n = 0;
    Coord vol;
    BigInt count;
    double estimate = 0.0;  // natural log of count over volume
    bool exhaustive = false;
    CountMethod method = CountMethod::enumerated;
};

struct EntropySeries {
    EntropyMode mode = EntropyMode::exact_pat;
    std::vector<EntropyRow> rows;
    bool truncated = false;
    std::string truncated_reason;
    // finite-range surrogates, never literal limits
    double limsup_surrogate = 0.0;  // max over all computed rows
    double liminf_tail_surrogate = 0.0;  // min over the second half of the range

    void finalize() {
        if (rows.empty()) return;
        limsup_surrogate = rows.front().estimate;
        for (const auto& r : rows) limsup_surrogate = std::max(limsup_surrogate, r.estimate);
        std::size_t from = rows.size() / 2;
        liminf_tail_surrogate = rows[from].estimate;
        for (std::size_t i = from; i < rows.size(); ++i)
            liminf_tail_surrogate = std::min(liminf_tail_surrogate, rows[i].estimate);
    }
};

struct EntropyOptions {
    std::size_t count_cap = 1u << 22;
    bool allow_structural = true;
    int scale_kmax = 6;               // V radii 2^-1 .. 2^-kmax
    SolveMethod method = SolveMethod::automatic;
};

/// Exact patch count of omega on window a, enumerated over the automatic
/// exhaustive sample window when possible.
inline std::pair<BigInt, CountMethod> count_patches(const PointSetOracle& omega, const Region& a,
                                                    const EntropyOptions& opts) {
    if (opts.allow_structural)
        if (auto c = structural_pat_count(omega, a)) return {*c, CountMethod::structural};
    SampleWindow s = auto_sample_window(omega, a);
    PatchSet ps = enumerate_patches(omega, a, s, opts.count_cap);
    return {BigInt(ps.count), CountMethod::enumerated};
}

inline EntropySeries entropy_along(const PointSetOracle& omega, const WindowSequence& seq, EntropyMode mode,
                                   long n_min, long n_max, const EntropyOptions& opts = {}) {
    EntropySeries series;
    series.mode = mode;
    for (long n = n_min; n <= n_max; ++n) {
        Region a = seq.at(n);
        EntropyRow row;
        row.n = n;
        row.vol = a.volume();
        if (row.vol.sign() <= 0) throw config_error("zero-volume window in entropy series");
        try {
            if (mode == EntropyMode::exact_pat) {
                auto [count, method] = count_patches(omega, a, opts);
                row.count = count;
                row.method = method;
                row.exhaustive = method == CountMethod::structural ||
                                 auto_sample_window(omega, a).exhaustive;
            } else {
                // sweep the V-radius schedule; pat is nonincreasing in V, so
                // the running sup is approached from below as V shrinks
                SampleWindow s = auto_sample_window(omega, a);
                BigInt best(0);
                BigInt prev(-1);
                for (int k = 1; k <= opts.scale_kmax; ++k) {
                    ScaleV v(Rational(1, BigInt(1) << k), a.dim());
                    CoverResult c = pat(omega, a, v, s, opts.method);
                    if (BigInt(c.size) > best) best = BigInt(c.size);
                    if (prev == BigInt(c.size)) break;  // schedule stabilized
                    prev = BigInt(c.size);
                }
                row.count = best;
                row.method = CountMethod::cover;
                row.exhaustive = s.exhaustive;
            }
        } catch (const overflow_cap_error& e) {
            series.truncated = true;
            series.truncated_reason = e.what();
            break;
        }
        row.estimate = ln_big(row.count) / row.vol.to_double();
        series.rows.push_back(std::move(row));
    }
    series.finalize();
    return series;
}

// ---------------------------------------------------------------------------
// Paper-bound audits with certified comparisons.

enum class AuditExample { ex51, ex52, ex53, intro11 };

inline const char* to_string(AuditExample e) {
    switch (e) {
        case AuditExample::ex51: return "5.1";
        case AuditExample::ex52: return "5.2";
        case AuditExample::ex53: return "5.3";
        case AuditExample::intro11: return "intro-1.1";
    }
    return "?";
}

struct BoundAuditRow {
    long n = 0;
    BigInt count;
    std::string lower, upper;  // human-readable bound expressions
    bool pass_lower = false, pass_upper = false;
    bool pass_estimate = true;  // 5.1 estimate bracket, certified
};

struct BoundAudit {
    AuditExample example;
    Rational param;  // kappa or rho
    std::vector<BoundAuditRow> rows;
    bool pass = true;
};

/// count >= 2^(p/q) decided exactly as count^q >= 2^p over big integers.
inline bool geq_pow2(const BigInt& count, const Rational& exponent) {
    if (exponent <= 0) return count >= 1;
    BigInt p = numerator(exponent), q = denominator(exponent);
    BigInt lhs = boost::multiprecision::pow(count, q.convert_to<unsigned>());
    return lhs >= BigInt(1) << p.convert_to<unsigned>();
}

inline bool leq_pow2(const BigInt& count, const Rational& exponent) {
    if (exponent <= 0) return count <= 1;
    BigInt p = numerator(exponent), q = denominator(exponent);
    BigInt lhs = boost::multiprecision::pow(count, q.convert_to<unsigned>());
    return lhs <= BigInt(1) << p.convert_to<unsigned>();
}

inline BoundAudit bound_audit(AuditExample example, const Rational& param, long n_min, long n_max,
                              const EntropyOptions& opts = {}) {
    BoundAudit audit{example, param, {}, true};
    const bool ex51 = example == AuditExample::ex51 || example == AuditExample::intro11;
    std::shared_ptr<PointSetOracle> omega;
    WindowSequence seq = ex51 ? WindowSequence(SeqKind::shifted_intervals, Rational(1), param)
                              : (example == AuditExample::ex52
                                     ? WindowSequence(SeqKind::folner_comb, param)
                                     : WindowSequence(SeqKind::ergodic_dust, param));
    if (ex51)
        omega = std::make_shared<HalflineMixOracle>(AlphaId::sqrt2_minus_1);
    else
        omega = std::make_shared<WordSetOracle>();

    for (long n = n_min; n <= n_max; ++n) {
        Region a = seq.at(n);
        SampleWindow s = auto_sample_window(*omega, a);
        PatchSet ps = enumerate_patches(*omega, a, s, opts.count_cap);
        BoundAuditRow row;
        row.n = n;
        row.count = BigInt(ps.count);
        Rational cnt(row.count);
        if (ex51) {
            Rational x = param * n;
            row.lower = "e^{kn}-1";
            row.upper = "(n+1)+e^{kn}+1";
            // count >= e^x - 1  <=>  count + 1 >= e^x (strict unless x = 0)
            row.pass_lower = x == 0 ? cnt + 1 >= 1 : cmp_with_exp(cnt + 1, x) > 0;
            // count <= n + 2 + e^x  <=>  count - n - 2 <= e^x
            row.pass_upper = x == 0 ? cnt <= Rational(n) + 3 : cmp_with_exp(cnt - n - 2, x) < 0;
            // estimate bracket: ln(1/2) + kn <= ln(count) <= ln(n+2) + kn,
            // i.e. 2*count >= e^{kn} and count <= (n+2)*e^{kn}
            bool est_lo = x == 0 ? 2 * cnt >= 1 : cmp_with_exp(2 * cnt, x) > 0;
            bool est_hi = x == 0 ? cnt <= Rational(n) + 2 : cmp_with_exp(cnt / (Rational(n) + 2), x) < 0;
            row.pass_estimate = est_lo && est_hi;
        } else if (example == AuditExample::ex52) {
            row.lower = "2^{rho n}";
            row.upper = "2^{rho n + 2}";
            row.pass_lower = geq_pow2(row.count, param * n);
            row.pass_upper = leq_pow2(row.count, param * n + 2);
        } else {
            row.lower = "2^{rho n}";
            row.upper = "2^{rho n + 1}";
            row.pass_lower = geq_pow2(row.count, param * n);
            row.pass_upper = leq_pow2(row.count, param * n + 1);
        }
        audit.pass = audit.pass && row.pass_lower && row.pass_upper && row.pass_estimate;
        audit.rows.push_back(std::move(row));
    }
    return audit;
}

// ---------------------------------------------------------------------------
// Cross-sequence convergence report.

struct CrossSequenceEntry {
    std::string label;
    EntropySeries series;
    Coord min_c_sup;  // over the computed range
};

struct CrossSequenceReport {
    std::vector<CrossSequenceEntry> entries;
    double max_pairwise_discrepancy = 0.0;  // at the largest computed n
};

inline CrossSequenceReport cross_sequence_report(const PointSetOracle& omega,
                                                 const std::vector<WindowSequence>& seqs,
                                                 EntropyMode mode, long n_min, long n_max,
                                                 const EntropyOptions& opts = {}) {
    CrossSequenceReport rep;
    for (const auto& seq : seqs) {
        CrossSequenceEntry e;
        e.label = to_string(seq.kind());
        e.series = entropy_along(omega, seq, mode, n_min, n_max, opts);
        Coord sup(0);
        for (long n = n_min; n <= n_max; ++n) {
            Coord c = connected_min_c(seq.at(n));
            if (c > sup) sup = c;
        }
        e.min_c_sup = sup;
        rep.entries.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < rep.entries.size(); ++i)
        for (std::size_t j = i + 1; j < rep.entries.size(); ++j) {
            const auto& a = rep.entries[i].series.rows;
            const auto& b = rep.entries[j].series.rows;
            if (a.empty() || b.empty()) continue;
            double d = std::abs(a.back().estimate - b.back().estimate);
            rep.max_pairwise_discrepancy = std::max(rep.max_pairwise_discrepancy, d);
        }
    return rep;
}

/// Asserts per-n estimate <= reference + tolerance along a Folner sequence.
inline bool folner_upper_check(const PointSetOracle& omega, const WindowSequence& seq, double reference,
                               double tolerance, long n_min, long n_max, const EntropyOptions& opts = {}) {
    EntropySeries s = entropy_along(omega, seq, EntropyMode::exact_pat, n_min, n_max, opts);
    if (s.truncated || s.rows.empty()) return false;
    for (const auto& row : s.rows)
        if (row.estimate > reference + tolerance) return false;
    return true;
}

}  // namespace patchkit
