#include "alignplot/lane_kernel.hpp"

namespace alignplot {

std::vector<BottomEvent> to_bottom_events(const RestrictedHSMEvents& ev) {
  std::vector<BottomEvent> out;
  out.reserve(ev.spans.size());
  const auto uncountable = static_cast<std::int32_t>(ev.window_cols + 1);
  for (std::size_t e = 0; e < ev.spans.size(); ++e) {
    const std::uint32_t span = ev.spans[e];
    const auto end = static_cast<std::int32_t>(e);
    const std::int32_t start = span == RestrictedHSMEvents::kInfSpan
                                   ? end - uncountable
                                   : end - static_cast<std::int32_t>(span);
    out.push_back({end, start});
  }
  return out;
}

namespace {

// One strip sweep by antidiagonals. Lane i holds the seaweeds of row i: V the
// one entering its current cell from the left, W the one entering from the
// top. Distances count r-column boundary crossings since the seaweed's start,
// so a lane increments exactly when its column advances across a multiple of
// r. Down-moving seaweeds stay in their column; the per-step lane shift of W
// realizes the downward move.
template <typename T>
std::vector<std::uint32_t> sweep(std::span<const std::uint8_t> xw,
                                 std::span<const std::uint8_t> y, unsigned r,
                                 std::size_t window_cols) {
  constexpr T INF = std::numeric_limits<T>::max();
  const std::size_t H = xw.size();
  const std::size_t N = y.size();

  std::vector<T> xc(H);
  for (std::size_t i = 0; i < H; ++i) xc[i] = xw[i];

  // Reversed, padded copy of y: lane i at step t compares against y[t - i],
  // which is the ascending slice yr[N + H - 1 - t + i]. Pad values are never
  // observable in valid output columns.
  std::vector<T> yr(N + 2 * H, T{0xFF});
  for (std::size_t j = 0; j < N; ++j) yr[N + H - 1 - j] = y[j];

  // inc[t % r][i] = 1 iff lane i crosses a multiple-of-r column boundary at
  // step t (its column is t - i).
  std::vector<std::vector<T>> inc(r, std::vector<T>(H, 0));
  for (unsigned p = 0; p < r; ++p) {
    for (std::size_t i = 0; i < H; ++i) inc[p][i] = (i % r == p) ? 1 : 0;
  }

  std::vector<T> vbuf(H, INF);
  std::vector<T> wbuf(H + 1, INF), wnext(H + 1, INF);
  wbuf[0] = 0;  // column 0's seaweed enters at the top of lane 0

  std::vector<std::uint32_t> spans(N, RestrictedHSMEvents::kInfSpan);
  for (std::size_t t = 0; t < H + N - 1; ++t) {
    // The buffers are disjoint; saying so lets the compiler map the lane
    // arithmetic onto hardware vector units (which must not change results).
    const T* __restrict__ ys = yr.data() + (N + H - 1 - t);
    const T* __restrict__ ic = inc[t % r].data();
    const T* __restrict__ xs = xc.data();
    T* __restrict__ v = vbuf.data();
    const T* __restrict__ wv = wbuf.data();
    T* __restrict__ wn = wnext.data() + 1;
    for (std::size_t i = 0; i < H; ++i) {
      const T vv = lane_ops::sat_add(v[i], ic[i]);
      const T tv = wv[i];
      const T m = lane_ops::eq(xs[i], ys[i]);
      const T c = lane_ops::lt(vv, tv);
      const T lo = lane_ops::select(c, vv, tv);
      const T hi = lane_ops::select(c, tv, vv);
      // Match: roles swap (top-entrant exits right, left-entrant exits down).
      // Mismatch: the later-started seaweed (smaller distance) exits down.
      v[i] = lane_ops::select(m, tv, hi);
      wn[i] = lane_ops::select(m, vv, lo);
    }

    if (t + 1 >= H) {
      const std::size_t col = t + 1 - H;
      const T d = wnext[H];
      if (d != INF) {
        const std::uint32_t span = static_cast<std::uint32_t>(d) * r +
                                   static_cast<std::uint32_t>(col % r);
        spans[col] = span <= window_cols ? span : RestrictedHSMEvents::kInfSpan;
      }
    }

    std::swap(wbuf, wnext);
    wbuf[0] = (t + 1 < N) ? 0 : INF;
  }
  return spans;
}

}  // namespace

RestrictedHSMEvents comb_strip_lanes(std::span<const std::uint8_t> xw,
                                     std::span<const std::uint8_t> y, std::size_t w,
                                     unsigned r, unsigned v) {
  if (r == 0) throw ConfigError("comb_strip_lanes: blowup factor must be positive");
  if (xw.size() != w * r) {
    throw ConfigError("comb_strip_lanes: expected a blown window of length w * r");
  }
  if (xw.empty() || y.empty()) throw ConfigError("comb_strip_lanes: empty strip");

  RestrictedHSMEvents ev;
  ev.window_cols = w * r;
  ev.stride = r;
  switch (v) {
    case 8:
      if (w + 1 > 255) {
        throw ConfigError("8-bit lanes hold restricted spans only for w <= 254 (got w = " +
                          std::to_string(w) + ")");
      }
      ev.spans = sweep<std::uint8_t>(xw, y, r, ev.window_cols);
      break;
    case 16:
      if (w * r + 1 > 65535) {
        throw ConfigError("16-bit lanes require a blown window below 65535 columns");
      }
      // 16-bit mode keeps distances in plain columns.
      ev.spans = sweep<std::uint16_t>(xw, y, 1, ev.window_cols);
      break;
    default:
      throw ConfigError("lane width must be 8 or 16 bits");
  }
  return ev;
}

}  // namespace alignplot
