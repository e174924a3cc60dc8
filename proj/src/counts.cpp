// SPDX-License-Identifier: Apache-2.0
#include "graphlet/counts.hpp"

namespace graphlet {

void accumulate_unrestricted(UnrestrictedCounts& acc, const EdgeMotifRecord& rec,
                             std::uint64_t n, std::uint64_t m) {
    const std::uint64_t t = rec.t;
    const std::uint64_t su = rec.s_u;
    const std::uint64_t sv = rec.s_v;
    const std::uint64_t de = rec.disconnected(n);

    acc.c3 = checked_add(acc.c3, t);
    acc.c4 = checked_add(acc.c4, su + sv);
    acc.c5 = checked_add(acc.c5, de);
    acc.c7 = checked_add(acc.c7, rec.x7);
    acc.c8 = checked_add(acc.c8, choose2(t));
    acc.c9 = checked_add(acc.c9, (count_t)t * (su + sv));
    acc.c10 = checked_add(acc.c10, rec.x10);
    acc.c11 = checked_add(acc.c11, choose2(sv) + choose2(su));
    acc.c12 = checked_add(acc.c12, (count_t)sv * su);
    acc.c13 = checked_add(acc.c13, (count_t)t * de);
    // deg(v)+deg(u) counts the edge itself twice, hence the +1.
    acc.c14 = checked_add(acc.c14, m - (rec.t + rec.s_u + 1) - (rec.t + rec.s_v + 1) + 1);
    acc.c15 = checked_add(acc.c15, (count_t)(sv + su) * de);
    acc.c16 = checked_add(acc.c16, choose2(de));
}

UnrestrictedCounts merge(const UnrestrictedCounts& a, const UnrestrictedCounts& b) {
    UnrestrictedCounts r;
    r.c3 = checked_add(a.c3, b.c3);
    r.c4 = checked_add(a.c4, b.c4);
    r.c5 = checked_add(a.c5, b.c5);
    r.c7 = checked_add(a.c7, b.c7);
    r.c8 = checked_add(a.c8, b.c8);
    r.c9 = checked_add(a.c9, b.c9);
    r.c10 = checked_add(a.c10, b.c10);
    r.c11 = checked_add(a.c11, b.c11);
    r.c12 = checked_add(a.c12, b.c12);
    r.c13 = checked_add(a.c13, b.c13);
    r.c14 = checked_add(a.c14, b.c14);
    r.c15 = checked_add(a.c15, b.c15);
    r.c16 = checked_add(a.c16, b.c16);
    return r;
}

const char* graphlet_name(int i) {
    switch (i) {
    case 1: return "edge";
    case 2: return "2-node-independent";
    case 3: return "triangle";
    case 4: return "2-star";
    case 5: return "3-node-1-edge";
    case 6: return "3-node-independent";
    case 7: return "4-clique";
    case 8: return "chordal-cycle";
    case 9: return "tailed-triangle";
    case 10: return "4-cycle";
    case 11: return "3-star";
    case 12: return "4-path";
    case 13: return "4-node-1-triangle";
    case 14: return "4-node-2-edge";
    case 15: return "4-node-2-star";
    case 16: return "4-node-1-edge";
    case 17: return "4-node-independent";
    default: return "?";
    }
}

namespace {

count_t div_exact(count_t num, unsigned den, const char* what) {
    if (num % den != 0)
        throw count_consistency_error(std::string(what) + ": inexact division by " +
                                      std::to_string(den));
    return num / den;
}

count_t sub_exact(count_t a, count_t b, const char* what) {
    if (a < b) throw count_consistency_error(std::string(what) + ": negative intermediate");
    return a - b;
}

} // namespace

GraphletVector global_from_unrestricted(const UnrestrictedCounts& c,
                                        std::uint64_t n, std::uint64_t m) {
    GraphletVector g;
    g.X(1) = m;
    g.X(2) = sub_exact(choose2(n), m, "X2");
    g.X(3) = div_exact(c.c3, 3, "X3");
    g.X(4) = div_exact(c.c4, 2, "X4");
    g.X(5) = c.c5;
    g.X(6) = sub_exact(choose3(n), g.X(3) + g.X(4) + g.X(5), "X6");
    g.X(7) = div_exact(c.c7, 6, "X7");
    g.X(8) = sub_exact(c.c8, c.c7, "X8");
    g.X(9) = div_exact(sub_exact(c.c9, 4 * g.X(8), "X9"), 2, "X9");
    g.X(10) = div_exact(c.c10, 4, "X10");
    g.X(11) = div_exact(sub_exact(c.c11, g.X(9), "X11"), 3, "X11");
    g.X(12) = sub_exact(c.c12, c.c10, "X12");
    g.X(13) = div_exact(sub_exact(c.c13, g.X(9), "X13"), 3, "X13");
    g.X(14) = div_exact(
        sub_exact(c.c14, 6 * g.X(7) + 4 * g.X(8) + 2 * g.X(9) + 4 * g.X(10) + 2 * g.X(12), "X14"),
        2, "X14");
    g.X(15) = div_exact(sub_exact(c.c15, 2 * g.X(12), "X15"), 2, "X15");
    g.X(16) = sub_exact(c.c16, 2 * g.X(14), "X16");
    count_t conn = 0;
    for (int i = 7; i <= 16; ++i) conn += g.X(i);
    g.X(17) = sub_exact(choose4(n), conn, "X17");
    return g;
}

LocalThree local_three_counts(const EdgeMotifRecord& rec, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("local counts need at least two vertices");
    LocalThree out;
    out.x3 = rec.t;
    out.x4 = (std::uint64_t)rec.s_u + rec.s_v;
    out.x5 = rec.disconnected(n);
    return out;
}

MicroRecord micro_counts(const EdgeMotifRecord& rec, std::uint64_t n) {
    LocalThree l = local_three_counts(rec, n);
    MicroRecord out;
    out.edge_id = rec.edge_id;
    out.x3 = l.x3;
    out.x4 = l.x4;
    out.x5 = l.x5;
    out.x7 = rec.x7;
    out.x10 = rec.x10;
    out.t = rec.t;
    out.s_u = rec.s_u;
    out.s_v = rec.s_v;
    out.d_e = l.x5;
    return out;
}

} // namespace graphlet
