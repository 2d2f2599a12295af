#include "dhyp/qcomb.hpp"

#include <stdexcept>

namespace dhyp {

QContext::QContext(const FieldCtx& ctx) : ctx_(ctx) {
  if (!ctx.has_root()) throw std::domain_error("QContext: field carries no root of unity");
  if (ctx.n() < 2) throw std::domain_error("QContext: requires n >= 2");
  fact_.resize(static_cast<size_t>(ctx.n()));
  fact_[0] = 1;
  for (int a = 1; a < ctx.n(); ++a) {
    fact_[static_cast<size_t>(a)] = ctx_.mul(fact_[static_cast<size_t>(a) - 1], q_int(a));
  }
}

std::uint64_t QContext::q_int(int a) const {
  if (a < 0) throw std::domain_error("q_int: negative argument");
  // (1 - q^a) / (1 - q); q != 1 since n >= 2
  std::uint64_t num = ctx_.sub(1, ctx_.pow(ctx_.q(), static_cast<std::uint64_t>(a)));
  std::uint64_t den = ctx_.sub(1, ctx_.q());
  return ctx_.mul(num, ctx_.inv(den));
}

std::uint64_t QContext::q_fact(int a) const {
  if (a < 0 || a >= ctx_.n()) throw std::domain_error("q_fact: argument outside 0..n-1");
  return fact_[static_cast<size_t>(a)];
}

std::uint64_t QContext::q_binom(int d, int a, int b) const {
  if (d < 0 || d >= ctx_.n()) throw std::domain_error("q_binom: top index outside 0..n-1");
  if (a + b != d) throw std::domain_error("q_binom: indices do not sum to top");
  if (a < 0 || b < 0) return 0;
  return ctx_.mul(q_fact(d), ctx_.inv(ctx_.mul(q_fact(a), q_fact(b))));
}

std::uint64_t QContext::q_trinom(int d, int a, int b, int c) const {
  if (d < 0 || d >= ctx_.n()) throw std::domain_error("q_trinom: top index outside 0..n-1");
  if (a + b + c != d) throw std::domain_error("q_trinom: indices do not sum to top");
  if (a < 0 || b < 0 || c < 0) return 0;
  std::uint64_t den = ctx_.mul(ctx_.mul(q_fact(a), q_fact(b)), q_fact(c));
  return ctx_.mul(q_fact(d), ctx_.inv(den));
}

RatioTriple ratio_triple(const QContext& qc, int alpha, int beta, int gamma) {
  const FieldCtx& f = qc.field();
  int n = qc.n();
  if (alpha < 0 || beta < 0 || gamma < 0 || alpha > n - 1 || beta > n - 1 || gamma > n - 1) {
    throw std::domain_error("ratio_triple: indices outside 0..n-1");
  }
  int s = alpha + beta + gamma;
  if (s < 1 || s > n) throw std::domain_error("ratio_triple: index sum outside 1..n");
  int d = s - 1;
  RatioTriple out;
  out.trinomials = {qc.q_trinom(d, alpha - 1, beta, gamma),
                    qc.q_trinom(d, alpha, beta - 1, gamma),
                    qc.q_trinom(d, alpha, beta, gamma - 1)};
  out.targets = {f.sub(1, f.pow(f.q(), static_cast<std::uint64_t>(alpha))),
                 f.sub(1, f.pow(f.q(), static_cast<std::uint64_t>(beta))),
                 f.sub(1, f.pow(f.q(), static_cast<std::uint64_t>(gamma)))};
  // scaling witness: [d]_q! / ((1-q) [alpha]_q! [beta]_q! [gamma]_q!)
  std::uint64_t den = f.mul(f.sub(1, f.q()),
                            f.mul(f.mul(qc.q_fact(alpha), qc.q_fact(beta)), qc.q_fact(gamma)));
  std::uint64_t nu = f.mul(qc.q_fact(d), f.inv(den));
  for (int i = 0; i < 3; ++i) {
    if (out.trinomials[static_cast<size_t>(i)] !=
        f.mul(nu, out.targets[static_cast<size_t>(i)])) {
      throw std::logic_error("ratio_triple: proportionality violated");
    }
  }
  return out;
}

}  // namespace dhyp
