#include "epw/fewamp.hpp"

#include "epw/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace epw {

std::vector<BigInt> AcceptanceSet::print_up_to(const BigInt& bound) const {
  std::vector<BigInt> out;
  BigInt x;
  try {
    x = least_element();
  } catch (const SetExhausted&) {
    return out;
  }
  while (x <= bound) {
    out.push_back(x);
    try {
      x = next_geq(x + 1);
    } catch (const SetExhausted&) {
      break;
    }
  }
  return out;
}

PowersOf::PowersOf(unsigned q) : q_(q) {
  if (q < 2) throw Error("powers of q need q >= 2");
}

std::string PowersOf::name() const { return q_ == 2 ? "pow2" : q_ == 4 ? "pow4" : "pow:" + std::to_string(q_); }

bool PowersOf::contains(const BigInt& n) const {
  if (n < 1) return false;
  BigInt x = n;
  while (x % q_ == 0) x /= q_;
  return x == 1;
}

BigInt PowersOf::next_geq(const BigInt& n) const {
  BigInt x = 1;
  while (x < n) x *= q_;
  return x;
}

NonMultiplesOf::NonMultiplesOf(unsigned k) : k_(k) {
  if (k < 2) throw Error("non-multiples of k need k >= 2");
}

std::string NonMultiplesOf::name() const { return "nonmult:" + std::to_string(k_); }

bool NonMultiplesOf::contains(const BigInt& n) const { return n >= 1 && n % k_ != 0; }

BigInt NonMultiplesOf::next_geq(const BigInt& n) const {
  if (n <= 1) return 1;
  return n % k_ == 0 ? BigInt(n + 1) : n;
}

std::optional<BigInt> NonMultiplesOf::gap_constant() const {
  // The worst ratio is at n = 1 (next member 3 when k = 2, else 2) or at
  // n = k - 1 (next member k + 1, ratio < 2 for k >= 3).
  return BigInt(k_ == 2 ? 3 : 2);
}

bool DoublyExponential::contains(const BigInt& n) const {
  if (!is_power_of_two(n) || n < 2) return false;
  return std::has_single_bit(static_cast<unsigned long long>(boost::multiprecision::msb(n)));
}

BigInt DoublyExponential::next_geq(const BigInt& n) const {
  BigInt x = 2;
  while (x < n) x *= x;
  return x;
}

ExplicitFinite::ExplicitFinite(std::vector<BigInt> members, std::string label)
    : members_(std::move(members)), label_(std::move(label)) {
  for (const auto& m : members_) {
    if (m < 1) throw Error("acceptance sets hold positive integers only");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ExplicitFinite::contains(const BigInt& n) const {
  return std::binary_search(members_.begin(), members_.end(), n);
}

BigInt ExplicitFinite::next_geq(const BigInt& n) const {
  if (members_.empty()) throw EmptySet(label_);
  auto it = std::lower_bound(members_.begin(), members_.end(), n);
  if (it == members_.end()) throw SetExhausted("no member of " + label_ + " >= " + n.str());
  return *it;
}

namespace {

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error("invalid " + std::string(what) + ": \"" + std::string(text) + "\"");
  }
  return v;
}

}  // namespace

std::shared_ptr<const AcceptanceSet> make_acceptance_set(std::string_view spec) {
  if (spec == "pow2") return std::make_shared<PowersOf>(2);
  if (spec == "pow4") return std::make_shared<PowersOf>(4);
  if (spec == "dexp") return std::make_shared<DoublyExponential>();
  if (spec.starts_with("pow:")) return std::make_shared<PowersOf>(parse_unsigned(spec.substr(4), "base"));
  if (spec.starts_with("nonmult:")) {
    return std::make_shared<NonMultiplesOf>(parse_unsigned(spec.substr(8), "modulus"));
  }
  if (spec.starts_with("file:")) {
    const std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<BigInt> members;
    std::string tok;
    while (in >> tok) {
      try {
        members.emplace_back(tok);
      } catch (const std::exception&) {
        throw Error("invalid set member \"" + tok + "\" in " + path);
      }
    }
    return std::make_shared<ExplicitFinite>(std::move(members), "file:" + path);
  }
  throw Error("unknown set \"" + std::string(spec) + "\" (expected pow2, pow4, pow:q, nonmult:k, dexp, file:path)");
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

NonGappyVerdict check_non_gappy(const AcceptanceSet& s, const BigInt& k, const BigInt& bound) {
  const BigInt least = s.least_element();
  if (bound < least) throw OutOfRange("bound " + bound.str() + " is below the least element " + least.str());
  NonGappyVerdict v{true, k, bound, {}};
  for (const BigInt& n : s.print_up_to(bound)) {
    bool ok = false;
    try {
      ok = s.next_geq(n + 1) <= k * n;
    } catch (const SetExhausted&) {
    }
    if (!ok) v.violations.push_back(n);
  }
  v.pass = v.violations.empty();
  return v;
}

AmplifierTable build_constants(std::shared_ptr<const AcceptanceSet> s, std::size_t p) {
  if (p < 1) throw OutOfRange("p must be at least 1");
  AmplifierTable t;
  t.p = p;
  t.c.assign(p + 1, 0);
  t.b.assign(p + 1, 0);
  t.a.assign(p + 1, 0);
  t.c[1] = s->least_element();
  t.a[1] = t.c[1];
  for (std::size_t i = 2; i <= p; ++i) {
    BigInt sum = 0;
    for (std::size_t k = 1; k < i; ++k) {
      sum += binomial(static_cast<unsigned>(i), static_cast<unsigned>(k)) * t.c[k];
    }
    t.b[i] = sum;
    t.a[i] = s->next_geq(sum);
    t.c[i] = t.a[i] - t.b[i];
  }
  t.set = std::move(s);
  return t;
}

BigInt amplified_count(const AmplifierTable& t, std::size_t m) {
  if (m > t.p) throw OutOfRange("m = " + std::to_string(m) + " exceeds p = " + std::to_string(t.p));
  BigInt sum = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    sum += binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) * t.c[i];
  }
  return sum;
}

FewRun FewRun::from_string(std::string_view pattern) {
  FewRun run;
  for (char ch : pattern) {
    if (ch == 'A' || ch == 'a') {
      run.accepts.push_back(true);
    } else if (ch == 'R' || ch == 'r') {
      run.accepts.push_back(false);
    } else {
      throw Error("run pattern may only contain 'A' and 'R'");
    }
  }
  return run;
}

std::size_t FewRun::accepting() const {
  return static_cast<std::size_t>(std::count(accepts.begin(), accepts.end(), true));
}

BigInt simulate_amplifier(const AmplifierTable& t, const FewRun& run) {
  const std::size_t paths = run.accepts.size();
  if (paths > kMaxSimulatedPaths) {
    throw TooManyPaths(std::to_string(paths) + " paths exceeds " + std::to_string(kMaxSimulatedPaths));
  }
  if (run.accepting() > t.p) {
    throw OutOfRange(std::to_string(run.accepting()) + " accepting paths exceed p = " + std::to_string(t.p));
  }
  std::uint32_t accept_mask = 0;
  for (std::size_t i = 0; i < paths; ++i) {
    if (run.accepts[i]) accept_mask |= std::uint32_t{1} << i;
  }
  // tally[i]: guessed i-subsets whose paths all accept.
  std::vector<std::uint64_t> tally(t.p + 1, 0);
  const std::uint32_t total = std::uint32_t{1} << paths;
  for (std::uint32_t subset = 1; subset < total; ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size > t.p) continue;
    if ((subset & ~accept_mask) == 0) ++tally[size];
  }
  BigInt sum = 0;
  for (std::size_t i = 1; i <= t.p; ++i) sum += t.c[i] * tally[i];
  return sum;
}

GrowthVerdict verify_growth(const AmplifierTable& t, const BigInt& k) {
  GrowthVerdict v;
  BigInt running_max = t.p >= 1 ? t.c[1] : BigInt(0);
  for (std::size_t j = 2; j <= t.p; ++j) {
    const auto ju = static_cast<unsigned>(j);
    const BigInt limit = k * (j - 1) * binomial(ju, (ju + 1) / 2) * running_max;
    if (t.c[j] > limit) v.ratio_failures.push_back(j);
    if (BigInt(1 + t.c[j]) > pow2(2 * ju * ju)) v.log_failures.push_back(j);
    running_max = std::max(running_max, t.c[j]);
  }
  v.pass = v.ratio_failures.empty() && v.log_failures.empty();
  return v;
}

RcVerdict check_rc_discipline(std::span<const std::pair<bool, BigInt>> counts, const AcceptanceSet& s) {
  RcVerdict v;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto& [in_language, count] = counts[i];
    const bool ok = in_language ? s.contains(count) : count == 0;
    if (!ok) v.violations.push_back(i);
  }
  v.pass = v.violations.empty();
  return v;
}

}  // namespace epw
