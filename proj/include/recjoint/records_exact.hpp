#pragma once

#include <vector>

#include "recjoint/distributions.hpp"

namespace recjoint {

/// Strictly increasing positions 1 <= j_1 < ... < j_d conditioning the joint
/// event "the observations at these positions are all records".
class RecordIndexSet {
public:
    explicit RecordIndexSet(std::vector<long> indices);
    const std::vector<long>& indices() const { return indices_; }
    int dim() const { return static_cast<int>(indices_.size()); }
    long max_index() const { return indices_.back(); }

private:
    std::vector<long> indices_;
};

/// P(all positions in idx are records) = prod 1/j_m.
double record_event_probability(const RecordIndexSet& idx);

/// Df of the maximum of n iid draws: F^n(x).
double single_record_cdf(const UnivariateLaw& law, long n, double x);

/// Density of the value at position j given it is a record: j f F^{j-1}.
double single_record_pdf(const UnivariateLaw& law, long j, double x);

/// Joint df of the values at positions j < k given both are records, on the
/// canonical negative-exponential scale (x1, x2 <= 0).
double pair_record_cdf_negexp(long j, long k, double x1, double x2);

/// Same joint df under an arbitrary built-in law, via x = log F(y).
double pair_record_cdf(const UnivariateLaw& law, long j, long k, double y1, double y2);

/// Marginal df of the earlier value of the conditioned pair:
/// (k e^{jx} - j e^{kx}) / (k - j).
double pair_marginal_early(long j, long k, double x);

/// Marginal df of the later value of the conditioned pair: e^{kx}.
double pair_marginal_late(long j, long k, double x);

/// Density of the earlier value of the conditioned pair under any built-in
/// law: jk/(k-j) f (F^{j-1} - F^{k-1}).
double pair_record_pdf(const UnivariateLaw& law, long j, long k, double x);

/// Joint df of the values at positions j < k < r given all three are records,
/// canonical scale.
double triple_record_cdf_negexp(long j, long k, long r, double x1, double x2, double x3);

/// Joint df for an arbitrary index set (dimension capped at 5), canonical
/// scale.  Computed by nested quadrature over the block-maxima
/// representation; agrees with the closed forms above to ~1e-9.
double d_record_cdf_negexp(const RecordIndexSet& idx, const std::vector<double>& xs);

} // namespace recjoint
