#include "commgraph/witness.hpp"

#include <algorithm>
#include <array>

#include "commgraph/notation.hpp"

namespace commgraph {

  namespace {

    using Images = std::array<Point, kMaxPoints>;

    Images undefined_images() {
      Images img;
      img.fill(kUndef);
      return img;
    }

    PTrans from_array(Images const& img, std::size_t n) {
      return PTrans::from_images(std::span<Point const>(img.data(), n));
    }

    void chain(Images& img, std::vector<Point> const& seq) {
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        img[seq[i]] = seq[i + 1];
      }
    }

    void cycle(Images& img, std::vector<Point> const& seq) {
      chain(img, seq);
      img[seq.back()] = seq.front();
    }

    void block(Images& img, std::vector<Point> const& labels, Point rep) {
      for (Point p : labels) {
        img[p] = rep;
      }
    }

    PTrans from_text(std::string_view text, std::size_t n) {
      return parse_element(text, n);
    }

    bool is_prime(std::size_t n) {
      if (n < 2) {
        return false;
      }
      for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::size_t smallest_divisor(std::size_t n) {
      for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return d;
        }
      }
      return n;
    }

    // x_i = i-1, y_i = m+i-1, z = 2m, w = 2m+1 (1-based indices i).
    struct FamilyPoints {
      std::size_t m;
      Point       x(std::size_t i) const {
        return static_cast<Point>(i - 1);
      }
      Point y(std::size_t i) const {
        return static_cast<Point>(m + i - 1);
      }
      Point z() const {
        return static_cast<Point>(2 * m);
      }
      Point w() const {
        return static_cast<Point>(2 * m + 1);
      }
    };

    std::vector<std::string> family_labels(std::size_t m, bool with_w) {
      std::vector<std::string> out;
      for (std::size_t i = 1; i <= m; ++i) {
        out.push_back("x" + std::to_string(i));
      }
      for (std::size_t i = 1; i <= m; ++i) {
        out.push_back("y" + std::to_string(i));
      }
      out.push_back("z");
      if (with_w) {
        out.push_back("w");
      }
      return out;
    }

    WitnessCase odd_family(std::size_t m) {
      FamilyPoints const P{m};
      std::size_t const  n = 2 * m + 1;
      WitnessCase        c;
      c.n      = n;
      c.family = Family::odd_composite;
      c.m      = m;

      Images             a = undefined_images();
      std::vector<Point> seq{P.z()};
      for (std::size_t i = 1; i <= m; ++i) {
        seq.push_back(P.y(i));
      }
      seq.push_back(P.x(1));
      chain(a, seq);
      seq.clear();
      for (std::size_t i = 1; i <= m; ++i) {
        seq.push_back(P.x(i));
      }
      cycle(a, seq);
      c.alpha = from_array(a, n);

      Images b = undefined_images();
      seq.clear();
      for (std::size_t i = 2; i <= m; ++i) {
        seq.push_back(P.x(i));
      }
      seq.insert(seq.end(), {P.x(1), P.z(), P.y(2)});
      chain(b, seq);
      seq.clear();
      for (std::size_t i = 2; i <= m; ++i) {
        seq.push_back(P.y(i));
      }
      seq.push_back(P.y(1));
      cycle(b, seq);
      c.beta = from_array(b, n);

      Images e = undefined_images();
      for (std::size_t j = 1; j < m; ++j) {
        block(e, {P.x(j), P.y(j)}, P.x(j));
      }
      block(e, {P.x(m), P.y(m), P.z()}, P.x(m));
      c.forced_e = from_array(e, n);

      Images f = undefined_images();
      block(f, {P.y(1), P.x(2), P.z()}, P.y(1));
      for (std::size_t j = 2; j < m; ++j) {
        block(f, {P.y(j), P.x(j + 1)}, P.y(j));
      }
      block(f, {P.y(m), P.x(1)}, P.y(m));
      c.forced_f = from_array(f, n);

      c.expected_lower_bound = 5;
      c.labels               = family_labels(m, false);
      return c;
    }

    WitnessCase even_family(std::size_t m) {
      FamilyPoints const P{m};
      std::size_t const  n = 2 * m + 2;
      WitnessCase        c;
      c.n      = n;
      c.family = Family::even_composite;
      c.m      = m;

      Images             a = undefined_images();
      std::vector<Point> seq{P.z()};
      for (std::size_t i = 1; i <= m; ++i) {
        seq.push_back(P.y(i));
      }
      seq.insert(seq.end(), {P.w(), P.x(2)});
      chain(a, seq);
      seq.clear();
      for (std::size_t i = 2; i <= m; ++i) {
        seq.push_back(P.x(i));
      }
      seq.push_back(P.x(1));
      cycle(a, seq);
      c.alpha = from_array(a, n);

      Images b = undefined_images();
      seq    = {P.w()};
      for (std::size_t i = 2; i <= m - 2; ++i) {
        seq.push_back(P.x(i));
      }
      seq.insert(seq.end(), {P.x(m), P.x(1), P.x(m - 1), P.z(), P.y(2)});
      chain(b, seq);
      seq.clear();
      for (std::size_t i = 2; i <= m; ++i) {
        seq.push_back(P.y(i));
      }
      seq.push_back(P.y(1));
      cycle(b, seq);
      c.beta = from_array(b, n);

      Images e = undefined_images();
      block(e, {P.x(1), P.y(1), P.w()}, P.x(1));
      for (std::size_t j = 2; j < m; ++j) {
        block(e, {P.x(j), P.y(j)}, P.x(j));
      }
      block(e, {P.x(m), P.y(m), P.z()}, P.x(m));
      c.forced_e = from_array(e, n);

      Images f = undefined_images();
      block(f, {P.y(1), P.x(2), P.z()}, P.y(1));
      for (std::size_t j = 2; j + 3 <= m; ++j) {
        block(f, {P.y(j), P.x(j + 1)}, P.y(j));
      }
      block(f, {P.y(m - 2), P.x(m)}, P.y(m - 2));
      block(f, {P.y(m - 1), P.x(1)}, P.y(m - 1));
      block(f, {P.y(m), P.x(m - 1), P.w()}, P.y(m));
      c.forced_f = from_array(f, n);

      c.expected_lower_bound = 5;
      c.labels               = family_labels(m, true);
      return c;
    }

    std::vector<std::string> numeric_labels(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

  }  // namespace

  ChainCycleLabeling chain_cycle_labeling(PTrans const& t) {
    if (!is_full(t)) {
      throw PreconditionError("chain/cycle labeling needs a full transformation");
    }
    std::size_t const n = t.degree();
    PointSet          periodic;
    for (std::size_t x = 0; x < n; ++x) {
      Point p = t[x];
      for (std::size_t j = 0; j < n && p != x; ++j) {
        p = t[p];
      }
      if (p == x) {
        periodic.insert(x);
      }
    }
    ChainCycleLabeling l;
    // Exactly one non-periodic point enters the cycle.
    std::optional<Point> entry;
    for (std::size_t x = 0; x < n; ++x) {
      if (!periodic.contains(x) && periodic.contains(t[x])) {
        if (entry) {
          throw PreconditionError("map has more than one chain");
        }
        entry = static_cast<Point>(x);
      }
    }
    if (!entry) {
      throw PreconditionError("map has no chain");
    }
    Point x1 = t[*entry];
    l.cycle.push_back(x1);
    for (Point p = t[x1]; p != x1; p = t[p]) {
      l.cycle.push_back(p);
    }
    if (l.cycle.size() != periodic.size()) {
      throw PreconditionError("map has more than one cycle");
    }
    Point current = *entry;
    while (true) {
      l.chain.push_back(current);
      std::optional<Point> prev;
      for (std::size_t x = 0; x < n; ++x) {
        if (t[x] == current && !periodic.contains(x)) {
          if (prev) {
            throw PreconditionError("chain branches");
          }
          prev = static_cast<Point>(x);
        }
      }
      if (!prev) {
        break;
      }
      current = *prev;
    }
    if (l.chain.size() + l.cycle.size() != n) {
      throw PreconditionError("map is not a single chain into a single cycle");
    }
    return l;
  }

  PTrans chain_cycle_map(std::size_t n, ChainCycleLabeling const& l) {
    if (l.cycle.empty() || l.chain.empty() || l.cycle.size() + l.chain.size() != n) {
      throw PreconditionError("labeling does not cover the ground set");
    }
    Images             img = undefined_images();
    std::vector<Point> seq(l.chain.rbegin(), l.chain.rend());
    seq.push_back(l.cycle.front());
    chain(img, seq);
    cycle(img, l.cycle);
    return from_array(img, n);
  }

  PTrans forced_idempotent(std::size_t m, std::size_t k, ChainCycleLabeling const& l) {
    if (m < 1 || k < 1 || l.cycle.size() != m || l.chain.size() != k
        || m + k > kMaxPoints) {
      throw PreconditionError("invalid chain/cycle labeling");
    }
    std::size_t const n    = m + k;
    PointSet          seen;
    auto              mark = [&](Point p) {
      if (p >= n || seen.contains(p)) {
        throw PreconditionError("labeling repeats or leaves the ground set");
      }
      seen.insert(p);
    };
    Images img = undefined_images();
    for (Point x : l.cycle) {
      mark(x);
      img[x] = x;
    }
    for (std::size_t i = 1; i <= k; ++i) {
      mark(l.chain[i - 1]);
      // i* = m - i + 1 mod m, in 1..m
      std::size_t star
          = ((m + 1 + m * k - i) % m == 0) ? m : (m + 1 + m * k - i) % m;
      img[l.chain[i - 1]] = l.cycle[star - 1];
    }
    return from_array(img, n);
  }

  char const* to_string(Family f) {
    switch (f) {
      case Family::n4:
        return "n4";
      case Family::n6:
        return "n6";
      case Family::n8:
        return "n8";
      case Family::odd_composite:
        return "odd_composite";
      case Family::even_composite:
        return "even_composite";
    }
    return "?";
  }

  WitnessCase witness_pair(std::size_t n) {
    if (n < 4 || is_prime(n)) {
      throw PreconditionError("witness pairs exist only for composite n >= 4, got "
                              + std::to_string(n));
    }
    if (n > kMaxPoints) {
      throw PreconditionError("n exceeds the supported ground set");
    }
    WitnessCase c;
    c.n      = n;
    c.labels = numeric_labels(n);
    c.expected_lower_bound = 5;
    switch (n) {
      case 4:
        c.family   = Family::n4;
        c.alpha    = from_text("(1 2 3 4)", 4);
        c.beta     = from_text("[1 2 3](3 4)", 4);
        c.forced_e = from_text("3 4 3 4", 4);
        c.expected_lower_bound = 4;
        return c;
      case 6:
        c.family   = Family::n6;
        c.alpha    = from_text("(1 2 3 4 5 6)", 6);
        c.beta     = from_text("[6 4 1 2](2 3 5)", 6);
        c.forced_e = from_text("{2 6 -> 2}{3 4 -> 3}{5 1 -> 5}", 6);
        return c;
      case 8:
        c.family   = Family::n8;
        c.alpha    = from_text("(1 2 3 4 5 6 7 8)", 8);
        c.beta     = from_text("[7 6 8 5 4 1](1 2 3)", 8);
        c.forced_e = from_text("{1 8 -> 1}{2 5 7 -> 2}{3 4 6 -> 3}", 8);
        return c;
      default:
        break;
    }
    return n % 2 == 1 ? odd_family((n - 1) / 2) : even_family((n - 2) / 2);
  }

  char const* to_string(PathConstruction c) {
    switch (c) {
      case PathConstruction::partial_partial:
        return "partial_partial";
      case PathConstruction::full_rank_one:
        return "full_rank_one";
      case PathConstruction::full_idempotent:
        return "full_idempotent";
      case PathConstruction::full_non_idempotent:
        return "full_non_idempotent";
      case PathConstruction::permutation_multicycle:
        return "permutation_multicycle";
      case PathConstruction::permutation_full_cycle:
        return "permutation_full_cycle";
      case PathConstruction::four_cycle_refined:
        return "four_cycle_refined";
    }
    return "?";
  }

  namespace {

    struct Walk {
      std::vector<PTrans> vertices;
      std::size_t         bound;
      PathConstruction    construction;
    };

    // Appends a map commuting with the full idempotent e and with (x->x').
    void idempotent_tail(PTrans const& e, Point x, Point xp, std::vector<PTrans>& walk) {
      std::size_t const n = e.degree();
      PointSet const    image = im(e);
      if (image.size() == 1) {
        Point    y = static_cast<Point>(image.min());
        PointSet fixed{x, xp, y};
        PointSet rest = PointSet::all(n) - fixed;
        Images   img  = undefined_images();
        for (std::size_t p = 0; p < n; ++p) {
          img[p] = static_cast<Point>(p);
        }
        if (rest.size() >= 2) {
          Point target = static_cast<Point>(rest.min());
          for (std::size_t p : rest.to_vector()) {
            img[p] = target;
          }
        } else {
          // A single leftover point would make the map above the identity;
          // sending it to x' keeps x as its own only preimage.
          img[rest.min()] = xp;
        }
        walk.push_back(from_array(img, n));
        return;
      }
      std::optional<Point> sub1;
      for (std::size_t y : image.to_vector()) {
        if (e[x] != y && e[xp] != y) {
          sub1 = static_cast<Point>(y);
          break;
        }
      }
      Images img = undefined_images();
      if (sub1) {
        for (std::size_t p : preimage(e, *sub1).to_vector()) {
          img[p] = *sub1;
        }
      } else {
        Point y  = e[x];
        Point yp = e[xp];
        for (std::size_t p : preimage(e, y).to_vector()) {
          img[p] = yp;
        }
      }
      walk.push_back(from_array(img, n));
    }

    // Appends id_Y and id_{y} for a permutation with at least two cycles.
    void multicycle_tail(PTrans const& a, Point x, Point xp, std::vector<PTrans>& walk) {
      std::size_t const n      = a.degree();
      auto const        cycles = cycle_decomposition(a);
      PointSet          Y;
      for (Point p : cycles.front()) {
        Y.insert(p);
      }
      walk.push_back(partial_identity(n, Y));
      Point y = static_cast<Point>((PointSet::all(n) - PointSet{x, xp}).min());
      walk.push_back(partial_identity(n, PointSet{y}));
    }

  }  // namespace

  BoundedPath upper_bound_path(CommGraph const& g, PTrans const& a, PTrans const& b) {
    if (g.semigroup() != Semigroup::all_partial) {
      throw PreconditionError("upper_bound_path works in C(P(X))");
    }
    std::size_t const n = g.degree();
    if (n < 4) {
      throw PreconditionError("upper_bound_path needs n >= 4");
    }
    if (!g.is_vertex(a) || !g.is_vertex(b)) {
      throw PreconditionError("upper_bound_path: both endpoints must be vertices");
    }
    if (is_full(a) && is_full(b)) {
      throw PreconditionError("both endpoints are full; use BFS instead");
    }
    bool const   swapped = !is_full(a) && is_full(b);
    PTrans const alpha   = swapped ? b : a;
    PTrans const beta    = swapped ? a : b;

    // beta is strictly partial: (x->x') commutes with it.
    Point const x  = static_cast<Point>((PointSet::all(n) - im(beta)).min());
    Point const xp = static_cast<Point>((PointSet::all(n) - dom(beta)).min());
    PTrans const to_beta = point_map(n, x, xp);

    Walk w{{alpha}, 0, PathConstruction::partial_partial};
    if (!is_full(alpha)) {
      Point ap = static_cast<Point>((PointSet::all(n) - dom(alpha)).min());
      Point aa = static_cast<Point>((PointSet::all(n) - im(alpha)).min());
      Point zp = static_cast<Point>((PointSet::all(n) - PointSet{aa, x}).min());
      Point z  = static_cast<Point>((PointSet::all(n) - PointSet{ap, xp}).min());
      w.vertices.push_back(point_map(n, aa, ap));
      w.vertices.push_back(point_map(n, z, zp));
      w.bound = 4;
    } else if (!is_permutation(alpha)) {
      PTrans e = alpha;
      if (!is_idempotent(alpha)) {
        e = idempotent_power(alpha).element;
        w.vertices.push_back(e);
        w.bound        = 4;
        w.construction = PathConstruction::full_non_idempotent;
      } else {
        w.bound        = 3;
        w.construction = rank(e) == 1 ? PathConstruction::full_rank_one
                                      : PathConstruction::full_idempotent;
      }
      idempotent_tail(e, x, xp, w.vertices);
    } else if (n == 4 && is_full_cycle(alpha)) {
      auto const               cyc = cycle_decomposition(alpha).front();
      PTrans const             sq  = power(alpha, 2);
      PointSet const           odd{cyc[0], cyc[2]};
      PointSet const           even{cyc[1], cyc[3]};
      w.vertices.push_back(sq);
      w.bound        = 4;
      w.construction = PathConstruction::four_cycle_refined;
      if (odd.contains(x) == odd.contains(xp)) {
        w.vertices.push_back(partial_identity(4, odd.contains(x) ? even : odd));
      } else {
        Images img = undefined_images();
        if (odd.contains(x)) {
          img[cyc[0]] = cyc[3];
          img[cyc[2]] = cyc[1];
        } else {
          img[cyc[1]] = cyc[0];
          img[cyc[3]] = cyc[2];
        }
        w.vertices.push_back(from_array(img, 4));
      }
    } else if (is_full_cycle(alpha)) {
      if (is_prime(n)) {
        throw PreconditionError("a full cycle on a prime number of points has "
                                "no path to a strictly partial vertex");
      }
      PTrans const p = power(alpha, smallest_divisor(n));
      w.vertices.push_back(p);
      w.bound        = 5;
      w.construction = PathConstruction::permutation_full_cycle;
      multicycle_tail(p, x, xp, w.vertices);
    } else {
      w.bound        = 4;
      w.construction = PathConstruction::permutation_multicycle;
      multicycle_tail(alpha, x, xp, w.vertices);
    }
    w.vertices.push_back(to_beta);
    w.vertices.push_back(beta);
    if (n == 4) {
      w.bound = std::min<std::size_t>(w.bound, 4);
    }
    if (swapped) {
      std::reverse(w.vertices.begin(), w.vertices.end());
    }
    BoundedPath out;
    out.certificate  = PathCertificate::from_vertices(walk_to_path(w.vertices));
    out.bound        = w.bound;
    out.construction = w.construction;
    if (!verify_path(g, out.certificate)) {
      throw Error("constructed path failed verification");
    }
    return out;
  }

}  // namespace commgraph
