#include <c2/errors.hpp>
#include <c2/stream.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>

namespace c2 {

struct BitStream::Generator {
  explicit Generator(Source s) : source(std::move(s)) {}

  BitString fetch(std::size_t begin, std::size_t end) {
    std::lock_guard lock(mutex);
    while (memo.size() < end)
      memo.push_back(source());
    return BitString(memo.begin() + static_cast<std::ptrdiff_t>(begin),
                     memo.begin() + static_cast<std::ptrdiff_t>(end));
  }

  std::mutex mutex;
  Source source;
  BitString memo;
};

namespace {

void check_horizon(std::size_t k, std::size_t horizon) {
  if (k > horizon)
    throw horizon_exceeded("requested " + std::to_string(k) + " bits, horizon is " +
                           std::to_string(horizon));
}

// Bit k of pre.(period)^omega without consulting the horizon.
Bit periodic_bit(const BitString& pre, const BitString& period, std::size_t k) {
  if (k < pre.size())
    return pre[k];
  return period[(k - pre.size()) % period.size()];
}

BitString primitive_root(const BitString& w) {
  const std::size_t q = w.size();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0)
      continue;
    bool repeats = true;
    for (std::size_t i = d; i < q && repeats; ++i)
      repeats = w[i] == w[i - d];
    if (repeats)
      return BitString(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return w;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

} // namespace

BitStream::BitStream() = default;

BitStream BitStream::finite(BitString bits) {
  BitStream x;
  x.form_ = Form::finite;
  x.horizon_ = bits.size();
  x.preperiod_ = std::move(bits);
  return x;
}

BitStream BitStream::periodic(BitString preperiod, BitString period, std::size_t horizon) {
  if (period.empty())
    throw invalid_argument("period of an eventually periodic stream must be non-empty");
  BitStream x;
  x.form_ = Form::periodic;
  x.horizon_ = horizon;
  x.preperiod_ = std::move(preperiod);
  x.period_ = std::move(period);
  return x;
}

BitStream BitStream::generated(Source source, std::size_t horizon) {
  BitStream x;
  x.form_ = Form::generated;
  x.horizon_ = horizon;
  x.generator_ = std::make_shared<Generator>(std::move(source));
  return x;
}

BitStream::Form BitStream::form() const noexcept { return form_; }
std::size_t BitStream::horizon() const noexcept { return horizon_; }
const BitString& BitStream::preperiod() const noexcept { return preperiod_; }
const BitString& BitStream::period() const noexcept { return period_; }

Bit BitStream::at(std::size_t k) const {
  if (k >= horizon_)
    throw horizon_exceeded("bit " + std::to_string(k) + " is beyond horizon " +
                           std::to_string(horizon_));
  switch (form_) {
  case Form::finite:
    return preperiod_[k];
  case Form::periodic:
    return periodic_bit(preperiod_, period_, k);
  case Form::generated:
    return generator_->fetch(offset_ + k, offset_ + k + 1).front();
  }
  return Bit::zero;
}

BitString BitStream::materialize(std::size_t k) const {
  check_horizon(k, horizon_);
  switch (form_) {
  case Form::finite:
    return BitString(preperiod_.begin(), preperiod_.begin() + static_cast<std::ptrdiff_t>(k));
  case Form::periodic: {
    BitString out(k);
    for (std::size_t i = 0; i < k; ++i)
      out[i] = periodic_bit(preperiod_, period_, i);
    return out;
  }
  case Form::generated:
    return generator_->fetch(offset_, offset_ + k);
  }
  return {};
}

bool BitStream::same_point(const BitStream& other) const noexcept {
  if (form_ != other.form_ || offset_ != other.offset_)
    return false;
  if (form_ == Form::generated)
    return generator_ == other.generator_;
  if (form_ == Form::periodic)
    return preperiod_ == other.preperiod_ && period_ == other.period_;
  // Two finite prefixes never determine the same infinite point.
  return this == &other;
}

std::strong_ordering compare_upper_bound(const Distance& a, const Distance& b) noexcept {
  const bool az = a.kind == Distance::Kind::zero;
  const bool bz = b.kind == Distance::Kind::zero;
  if (az || bz)
    return bz <=> az;
  // Larger exponent means smaller distance.
  if (a.exponent != b.exponent)
    return b.exponent <=> a.exponent;
  const bool a_at_most = a.kind == Distance::Kind::at_most;
  const bool b_at_most = b.kind == Distance::Kind::at_most;
  return b_at_most <=> a_at_most;
}

std::string to_string(const Distance& d) {
  switch (d.kind) {
  case Distance::Kind::zero:
    return "0";
  case Distance::Kind::exact:
    return "2^-" + std::to_string(d.exponent);
  case Distance::Kind::at_most:
    return "<=2^-" + std::to_string(d.exponent);
  }
  return "?";
}

bool is_prefix(const BitString& w, const BitStream& x) {
  return x.materialize(w.size()) == w;
}

Distance prefix_metric(const BitStream& x, const BitStream& y, std::size_t horizon) {
  check_horizon(horizon, x.horizon());
  check_horizon(horizon, y.horizon());
  if (x.same_point(y))
    return Distance::make_zero();

  if (x.form() == BitStream::Form::periodic && y.form() == BitStream::Form::periodic) {
    const BitStream cx = canonical(x);
    const BitStream cy = canonical(y);
    if (cx.preperiod() == cy.preperiod() && cx.period() == cy.period())
      return Distance::make_zero();
    // Distinct canonical forms differ before max(pre) + lcm(periods).
    for (std::size_t n = 0;; ++n)
      if (periodic_bit(cx.preperiod(), cx.period(), n) !=
          periodic_bit(cy.preperiod(), cy.period(), n))
        return Distance::make_exact(n);
  }

  const BitString a = x.materialize(horizon);
  const BitString b = y.materialize(horizon);
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin());
  if (ia == a.end())
    return Distance::make_at_most(horizon);
  return Distance::make_exact(static_cast<std::size_t>(ia - a.begin()));
}

BitStream cycle_stream(const BitString& w, const BitString& preperiod) {
  if (w.empty())
    throw invalid_argument("cycle word must be non-empty");
  return BitStream::periodic(preperiod, w);
}

CycleReport detect_cycle(const BitStream& x, std::size_t horizon) {
  const BitString bits = x.materialize(horizon);
  const std::size_t h = bits.size();

  // For each period q, the smallest preperiod p(q) such that
  // bits[i] == bits[i + q] for all p(q) <= i < h - q. Scanning backwards
  // stops at the first mismatch, which is immediate for wrong periods.
  std::size_t best_p = h + 1;
  std::vector<std::size_t> min_pre(h / 2 + 1, h + 1);
  for (std::size_t q = 1; 2 * q <= h; ++q) {
    std::size_t p = 0;
    for (std::size_t i = h - q; i-- > 0;) {
      if (bits[i] != bits[i + q]) {
        p = i + 1;
        break;
      }
    }
    if (2 * p <= h && p + 2 * q <= h) {
      min_pre[q] = p;
      best_p = std::min(best_p, p);
    }
  }

  CycleReport report;
  if (best_p > h) {
    report.cycle_number = h;
    return report;
  }
  for (std::size_t q = 1; 2 * q <= h; ++q) {
    if (min_pre[q] <= best_p && best_p + 2 * q <= h) {
      report.detected = true;
      report.preperiod_length = best_p;
      report.period.assign(bits.begin() + static_cast<std::ptrdiff_t>(best_p),
                           bits.begin() + static_cast<std::ptrdiff_t>(best_p + q));
      report.cycle_number = q;
      break;
    }
  }
  return report;
}

BitStream shift(const BitStream& x, std::size_t k) {
  check_horizon(k, x.horizon());
  BitStream out = x;
  if (x.horizon_ != BitStream::unbounded)
    out.horizon_ = x.horizon_ - k;
  switch (x.form_) {
  case BitStream::Form::finite:
    out.preperiod_.erase(out.preperiod_.begin(),
                         out.preperiod_.begin() + static_cast<std::ptrdiff_t>(k));
    break;
  case BitStream::Form::periodic:
    if (k <= x.preperiod_.size()) {
      out.preperiod_.erase(out.preperiod_.begin(),
                           out.preperiod_.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      const std::size_t r = (k - x.preperiod_.size()) % x.period_.size();
      out.preperiod_.clear();
      std::rotate(out.period_.begin(), out.period_.begin() + static_cast<std::ptrdiff_t>(r),
                  out.period_.end());
    }
    break;
  case BitStream::Form::generated:
    out.offset_ = x.offset_ + k;
    break;
  }
  return out;
}

BitStream canonical(const BitStream& x) {
  if (x.form() != BitStream::Form::periodic)
    return x;
  BitString pre = x.preperiod();
  BitString w = primitive_root(x.period());
  while (!pre.empty() && pre.back() == w.back()) {
    pre.pop_back();
    std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
  }
  return BitStream::periodic(std::move(pre), std::move(w), x.horizon());
}

BitStream parse_stream(std::string_view text) {
  text = trim(text);
  if (text.empty())
    throw parse_error("empty stream literal");
  const auto open = text.find('(');
  if (open == std::string_view::npos)
    return BitStream::finite(parse_bits(text));
  if (text.back() != ')' || text.find('(', open + 1) != std::string_view::npos)
    throw parse_error("stream literal must look like PREFIX(PERIOD)");
  const auto period = text.substr(open + 1, text.size() - open - 2);
  if (period.empty())
    throw parse_error("empty period in stream literal");
  return BitStream::periodic(parse_bits(text.substr(0, open)), parse_bits(period));
}

std::string to_string(const BitStream& x) {
  switch (x.form()) {
  case BitStream::Form::finite:
    return to_string(x.preperiod());
  case BitStream::Form::periodic:
    return to_string(x.preperiod()) + "(" + to_string(x.period()) + ")";
  case BitStream::Form::generated:
    return to_string(x.materialize(x.horizon()));
  }
  return {};
}

} // namespace c2
