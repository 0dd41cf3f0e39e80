#pragma once

#include <array>
#include <string_view>

namespace oreqs {

/// Built-in sample problems; each text is byte-identical to the matching
/// file under fixtures/.
struct Fixture {
    std::string_view id;
    std::string_view ring;
    int expected_rank;
    std::string_view oreq;
};

inline constexpr std::string_view kConjugation4x4 = R"oreq(# 4x4 idempotent over Q(i)[x; conj], delta = 0
name conjugation_4x4
expected_rank 3
ring { field = Qi; sigma = conj; delta = zero }
matrix 4 x 4
1 - i*x - x^2 + (1+i)*x^3 ; -1 + (2-i)*x^2 + (-1-i)*x^3 ; -i - x + (1+i)*x^2 ; 1 + i*x + (-1+i)*x^2
-i*x + (1+i)*x^3 ; i*x + (1-i)*x^2 + (-1-i)*x^3 ; -i + (1+i)*x^2 ; 1 + (-1+i)*x^2
i*x^2 ; -x - i*x^2 ; 1 + i*x ; x
x^3 - x^2 ; -i*x + (1-i)*x^2 - x^3 ; x^2 - x ; 1 + i*x + i*x^2
)oreq";

inline constexpr std::string_view kWeyl4x4 = R"oreq(# 4x4 idempotent over Q(t)[x; id, d/dt] (rational Weyl algebra)
name weyl_4x4
expected_rank 2
ring { field = Qt; sigma = id; delta = ddt }
matrix 4 x 4
2 + 2*t + (13*t^2-5*t)*x + (8*t^3-6*t^2)*x^2 + (t^4-t^3)*x^3 ; -t^3*x^3 - 5*t^2*x^2 - 3*t*x + 1 ; t^3*x^3 + 5*t^2*x^2 + 3*t*x - 1 ; 0
2*t^2 + t + (13*t^3-8*t^2)*x + (8*t^4-7*t^3)*x^2 + (t^5-t^4)*x^3 ; t + (-3*t^2+2*t)*x + (-5*t^3+t^2)*x^2 - t^4*x^3 ; t^4*x^3 + 5*t^3*x^2 + 2*t^2*x - 2*t ; t*x
3*t + 2 + (14*t^2-8*t)*x + (8*t^3-7*t^2)*x^2 + (t^4-t^3)*x^3 ; -t^3*x^3 - 5*t^2*x^2 - 3*t*x + 1 ; -t - 1 + (-t^2+5*t)*x + 6*t^2*x^2 + t^3*x^3 ; t*x
t^2 + t + (t^3+6*t^2)*x + 6*t^3*x^2 + t^4*x^3 ; -t^3*x^3 - 5*t^2*x^2 - 3*t*x + 1 ; -t^2 + t + (-t^3+6*t^2)*x + 2*t^3*x^2 ; 1 + (t^2-2*t)*x - t^2*x^2
)oreq";

inline constexpr std::string_view kShift3x3 = R"oreq(# 3x3 idempotent over Q(t)[x; t -> t+1], delta = 0
name shift_3x3
expected_rank 2
ring { field = Qt; sigma = shift(1); delta = zero }
matrix 3 x 3
1 - (2*t/(1+t))*x ; 2*t - (2*t*(3+2*t)/(1+t))*x ; (2*t/(1+t)^2)*x
(1/(1+t))*x ; ((3+2*t)/(1+t))*x ; (-1/(1+t)^2)*x
(t/(1+t))*x ; -t + (t*(3+2*t)/(1+t))*x ; 1 - (t/(1+t)^2)*x
)oreq";

inline constexpr std::string_view kQDifference4x4 = R"oreq(# 4x4 idempotent over Q(q)(t)[x; t -> q t, q-difference delta], q symbolic
name qdifference_4x4
expected_rank 2
ring { field = Qqt; sigma = scale(q); delta = qdiff }
matrix 4 x 4
-q*t^2*x^2 - 2*t*x + 2 ; -t*x - 2 ; -q^3*t^3*x^3 + (-q^2*t^2 - 3*q*t^2)*x^2 - t*x - 2 ; -q^3*t^3*x^3 + (-q^2*t^2 - 5*q*t^2)*x^2 - 5*t*x + 2
-2 ; -q*t^2*x^2 - 2*t*x + 3 ; -q*t^2*x^2 - 4*t*x + 3 ; -q^3*t^3*x^3 + (-q^2*t^2 - 3*q*t^2)*x^2 - t*x - 2
t*x + 2 ; -t*x - 2 ; q*t^2*x^2 + 2*t*x - 2 ; t*x + 2
-1 ; t*x + 2 ; 2 ; q*t^2*x^2 + 2*t*x - 1
)oreq";

inline constexpr std::array<Fixture, 4> kFixtures = {{
    Fixture{"conjugation_4x4", "Q(i)[x; conj], delta = 0", 3, kConjugation4x4},
    Fixture{"weyl_4x4", "Q(t)[x; id, d/dt]", 2, kWeyl4x4},
    Fixture{"shift_3x3", "Q(t)[x; t -> t+1], delta = 0", 2, kShift3x3},
    Fixture{"qdifference_4x4", "Q(q)(t)[x; t -> q t, q-difference]", 2, kQDifference4x4},
}};

}  // namespace oreqs
