#pragma once

#include "rational.hpp"

#include <array>
#include <stdexcept>

namespace logjets {

// Power series truncated after t^4; enough to recover three derivative orders
// of a pulled-back 1-form.
struct TruncatedSeries {
    static constexpr int order = 4;
    std::array<Rational, 5> c{};

    static TruncatedSeries constant(const Rational& a) {
        TruncatedSeries s;
        s.c[0] = a;
        return s;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries r;
        for (int i = 0; i <= order; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const {
        TruncatedSeries r;
        for (int i = 0; i <= order; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        TruncatedSeries r;
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                r.c[i + j] += c[i] * o.c[j];
        return r;
    }

    TruncatedSeries operator*(const Rational& q) const {
        TruncatedSeries r;
        for (int i = 0; i <= order; ++i) r.c[i] = c[i] * q;
        return r;
    }

    // d/dt; the top coefficient is lost.
    TruncatedSeries derivative() const {
        TruncatedSeries r;
        for (int i = 1; i <= order; ++i) r.c[i - 1] = c[i] * i;
        r.c[order] = 0;
        return r;
    }

    TruncatedSeries reciprocal() const {
        if (c[0] == 0) throw std::domain_error("series reciprocal at zero constant term");
        TruncatedSeries r;
        r.c[0] = Rational(1) / c[0];
        for (int k = 1; k <= order; ++k) {
            Rational s(0);
            for (int i = 1; i <= k; ++i) s += c[i] * r.c[k - i];
            r.c[k] = -s / c[0];
        }
        return r;
    }
};

} // namespace logjets
