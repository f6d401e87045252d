#ifndef FUSEDET_KAHAN_HPP
#define FUSEDET_KAHAN_HPP

namespace fusedet {

/// Compensated (Kahan) accumulator. Probability masses summed over up to
/// 2^20 terms must stay accurate to ~1e-15; naive accumulation does not.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace fusedet

#endif  // FUSEDET_KAHAN_HPP
