#include "plumbcalc/section3.hpp"

#include <sstream>
#include <stdexcept>

namespace plumbcalc {

namespace {

AmbientClass make_class(long h, std::initializer_list<std::pair<int, long>> coeffs) {
    AmbientClass c;
    c.h = h;
    c.e.assign(16, Int(0));
    for (const auto& [i, v] : coeffs) c.e[i - 1] = v;
    return c;
}

Section3Data build_data() {
    Section3Data d;
    d.u.reserve(11);
    d.u.push_back(make_class(6, {{1, -1}, {2, -2}, {3, -2}, {4, -2}, {5, -2}, {6, -2}, {7, -2},
                                 {8, -2}, {9, -2}, {11, -2}, {12, -2}, {13, -1}, {14, -1},
                                 {15, -1}, {16, -1}}));
    d.u.push_back(make_class(3, {{1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -1},
                                 {8, -1}, {9, -1}, {10, -2}}));
    d.u.push_back(make_class(0, {{9, 1}, {14, -1}, {15, -1}, {16, -1}}));
    d.u.push_back(make_class(0, {{15, 1}, {16, -1}}));
    d.u.push_back(make_class(0, {{8, 1}, {9, -1}}));
    d.u.push_back(make_class(0, {{7, 1}, {8, -1}}));
    d.u.push_back(make_class(0, {{6, 1}, {7, -1}}));
    d.u.push_back(make_class(0, {{5, 1}, {6, -1}}));
    d.u.push_back(make_class(0, {{4, 1}, {5, -1}}));
    d.u.push_back(make_class(0, {{3, 1}, {4, -1}}));
    d.u.push_back(make_class(1, {{1, -1}, {2, -1}, {3, -1}, {13, -1}}));
    d.alpha = make_class(10, {{1, -3}, {2, -2}, {3, -3}, {4, -3}, {5, -3}, {6, -3}, {7, -3},
                              {8, -3}, {9, -3}, {10, -2}, {11, -1}, {12, -2}, {13, -2}, {14, -3}});
    d.k_class.h = 3;
    d.k_class.e.assign(16, Int(-1));
    d.h_class.h = 1;
    d.h_class.e.assign(16, Int(0));
    return d;
}

}  // namespace

const Section3Data& section3_data() {
    static const Section3Data d = build_data();
    return d;
}

Presentation meridian_presentation(int n) {
    if (n < 2) throw std::invalid_argument("meridian_presentation: need n >= 2");
    Presentation p;
    p.generators = n + 3;
    for (int i = 1; i <= n - 1; ++i) p.relators.push_back({i, n + 2, n + 3});
    p.relators.push_back({n, n + 1, n + 2, n + 3});
    std::vector<int> w;
    for (int i = 1; i <= n; ++i) w.push_back(i);
    p.relators.push_back(w);  // m_1 ... m_n
    w.push_back(n + 1);
    w.push_back(n + 2);
    p.relators.push_back(w);  // m_1 ... m_{n+2}
    std::vector<int> x;
    for (int i = 1; i <= n - 1; ++i) x.push_back(i);
    x.push_back(n + 1);
    p.relators.push_back(x);  // m_1 ... m_{n-1} m_{n+1}
    std::vector<int> y;
    for (int i = 1; i <= n + 1; ++i) y.push_back(i);
    y.push_back(n + 3);
    p.relators.push_back(y);  // m_1 ... m_{n+1} m_{n+3}
    return p;
}

GramReport section3_gram_report() {
    const Section3Data& data = section3_data();
    GramReport r;
    IntMatrix g = gram_matrix(data.u);

    for (int i = 0; i < g.rows; ++i) r.diagonal.push_back(g.at(i, i));
    r.expected_diagonal = {Int(-9), Int(-4), Int(-4), Int(-2), Int(-2), Int(-2),
                           Int(-2), Int(-2), Int(-2), Int(-2), Int(-3)};
    r.diagonal_matches = (r.diagonal == r.expected_diagonal);

    r.det = det_bareiss(g);
    r.expected_det_abs = 1445;
    r.det_matches = (abs(r.det) == r.expected_det_abs);

    Inertia in = signature_exact(g);
    r.signature = Int(in.positive - in.negative);
    r.expected_signature = -11;
    r.signature_matches = (r.signature == r.expected_signature);

    for (const auto& ui : data.u) r.k_pairings.push_back(pairing(data.k_class, ui));
    r.expected_k_class_order = 85;
    if (r.det != 0) {
        r.k_class_order = boundary_class_order(g, r.k_pairings);
        r.order_matches = (r.k_class_order == r.expected_k_class_order);
    } else {
        r.k_class_order = 0;
        r.order_matches = false;
    }

    for (int i = 0; i < g.rows; ++i)
        for (int j = i + 1; j < g.cols; ++j)
            if (g.at(i, j) != 0 && g.at(i, j) != 1)
                r.offenders.push_back({i + 1, j + 1, g.at(i, j)});
    return r;
}

std::string render_gram_report(const GramReport& r) {
    std::ostringstream os;
    auto mark = [](bool ok) { return ok ? "ok      " : "MISMATCH"; };
    os << "gram diagonal   " << mark(r.diagonal_matches) << " (";
    for (std::size_t i = 0; i < r.diagonal.size(); ++i)
        os << (i ? "," : "") << r.diagonal[i].get_str();
    os << ")\n";
    os << "gram det        " << mark(r.det_matches) << " actual " << r.det.get_str()
       << " expected +-" << r.expected_det_abs.get_str() << "\n";
    os << "gram signature  " << mark(r.signature_matches) << " actual " << r.signature.get_str()
       << " expected " << r.expected_signature.get_str() << "\n";
    os << "K class order   " << mark(r.order_matches) << " actual " << r.k_class_order.get_str()
       << " expected " << r.expected_k_class_order.get_str() << "\n";
    if (r.offenders.empty()) {
        os << "off-diagonal entries all in {0,1}\n";
    } else {
        for (const auto& o : r.offenders)
            os << "off-diagonal u" << o.i << ".u" << o.j << " = " << o.value.get_str()
               << " outside {0,1}: transcription caveat\n";
    }
    return os.str();
}

}  // namespace plumbcalc
