//! Printed closed forms, keyed by pattern text.

pub const A6_ENTRIES: [(&str, &str); 5] = [
    ("((()))", "(q*w1-q^-1*w2)(q*w2-q^-1*w3)(q*w1-q^-1*w3)(q*w4-q^-1*w5)(q*w5-q^-1*w6)(q*w4-q^-1*w6)"),
    ("(()())", "(q*w1-q^-1*w2)(q*w3-q^-1*w4)(q*w5-q^-1*w6)((w1+w2)(q^2*w3*w4-q^-2*w5*w6)-(w3+w4)(q^4*w1*w2-q^-4*w5*w6)+(w5+w6)(q^2*w1*w2-q^-2*w3*w4))"),
    ("()(())", "(q*w2-q^-1*w3)(q*w2-q^-1*w4)(q*w3-q^-1*w4)(q*w5-q^-1*w6)(q^-2*w6-q^2*w1)(q^-2*w5-q^2*w1)"),
    ("(())()", "(q*w1-q^-1*w2)(q*w3-q^-1*w4)(q*w4-q^-1*w5)(q*w3-q^-1*w5)(q^-2*w6-q^2*w1)(q^-2*w6-q^2*w2)"),
    ("()()()", "(q*w2-q^-1*w3)(q*w4-q^-1*w5)(q^-2*w6-q^2*w1)((q^3*w1+q^-3*w6)(q^2*w2*w3-q^-2*w4*w5)-(w2+w3)(q*w1*w6-q^-1*w4*w5)-(w4+w5)(q*w2*w3-q^-1*w1*w6))"),
];

pub const A6_MULTIDEGREES: [(&str, &str); 5] = [
    ("((()))", "(A+z1-z2)(A+z2-z3)(A+z1-z3)(A+z4-z5)(A+z5-z6)(A+z4-z6)"),
    ("(()())", "(A+z1-z2)(A+z3-z4)(A+z5-z6)(4A^3+3A^2(z1+z2-z5-z6)+A(2(z1z2-2z3z4-z1z5-z2z5-z1z6-z2z6+z5z6)+(z3+z4)(z1+z2+z5+z6))+(z1+z2)(z5z6-z3z4)+(z3+z4)(z1z2-z5z6)+(z5+z6)(z3z4-z1z2))"),
    ("()(())", "(A+z2-z3)(A+z2-z4)(A+z3-z4)(A+z5-z6)(2A+z1-z6)(2A+z1-z5)"),
    ("(())()", "(A+z1-z2)(A+z3-z4)(A+z4-z5)(A+z3-z5)(2A+z1-z6)(2A+z2-z6)"),
    ("()()()", "(A+z2-z3)(A+z4-z5)(2A+z1-z6)(5A^3+3A^2(z1+z2+z3-z4-z5-z6)+A(2z1(z2+z3-z6)+z2z3+z4z5-(z2+z3)z6+(z4+z5)(2z6-z1-z2-z3))+(z1+z6)(z2z3-z4z5)+(z2+z3)(z4z5-z1z6)+(z4+z5)(z1z6-z2z3))"),
];

pub const B4_ENTRIES: [(&str, &str); 2] = [
    ("(())", "4(q*w1-q^-1)(q*w2-q^-1)(q*w3-q^-1)(q*w4-q^-1)(q*w1-q^-1*w2)(q^-2-q^2*w1*w2)(q*w3-q^-1*w4)(q*w3*w4-q^-1)"),
    ("()()", "4(q*w1-q^-1)(q*w2-q^-1)(q*w3-q^-1)(q*w4-q^-1)(q*w2-q^-1*w3)(q^-1*w1-q*w1*w2*w3-q^-5*w4-q*w1^2*w4+(q^-1-q)w1(w2+w3)w4+q^-1*w2*w3*w4+q^5*w1^2*w2*w3*w4+q^-1*w1*w4^2-q*w1*w2*w3*w4^2)"),
];

pub const B4_MULTIDEGREES: [(&str, &str); 2] = [
    ("(())", "4(A+z1)(A+z2)(A+z3)(A+z4)(A+z1-z2)(2A+z1+z2)(A+z3-z4)(A+z3+z4)"),
    ("()()", "4(A+z1)(A+z2)(A+z3)(A+z4)(A+z2-z3)(5A^3+3A^2(2z1+z2+z3)+A(2z1^2+3z1(z2+z3)+z2z3-z4^2)+(z2+z3)(z1^2-z4^2))"),
];

pub const C3_ENTRIES: [(&str, &str); 3] = [
    ("...", "(q*w1-q^-1*w2)(q*w1-q^-1*w3)(q*w2-q^-1*w3)"),
    (".()", "(q*w1-q^-1*w2)(q^2*w1*w2-q^-2)(q^-1-q*w3^2)"),
    ("().", "(q^3*w1^2-q^-3)(q*w2-q^-1*w3)(q*w2*w3-q^-1)"),
];

pub const C3_MULTIDEGREES: [(&str, &str); 3] = [
    ("...", "(A+z1-z2)(A+z1-z3)(A+z2-z3)"),
    (".()", "(A+z1-z2)(2A+z1+z2)(A+2z3)"),
    ("().", "(3A+2z1)(A+z2-z3)(A+z2+z3)"),
];

pub const D3_ENTRIES: [(&str, &str); 3] = [
    ("...", "(q*w1-q^-1*w2)(q*w1-q^-1*w3)(q*w2-q^-1*w3)"),
    (".()", "(q*w1-q^-1*w2)(q*w1*w3-q^-1)(q*w2*w3-q^-1)"),
    ("().", "(q^-2-q^2*w1^2)(q*w2-q^-1*w3)(q*w2*w3-q^-1)"),
];

pub const D3_MULTIDEGREES: [(&str, &str); 3] = [
    ("...", "(A+z1-z2)(A+z1-z3)(A+z2-z3)"),
    (".()", "(A+z1-z2)(A+z1+z3)(A+z2+z3)"),
    ("().", "2(A+z1)(A+z2-z3)(A+z2+z3)"),
];

pub const A6_ORDER: [&str; 5] = ["((()))", "(()())", "()(())", "(())()", "()()()"];
pub const C5_ORDER: [&str; 10] = [".....", "...()", "..().", ".()..", "()...", ".(())", ".()()", "().()", "(()).", "()()."];
pub const D5_ORDER: [&str; 10] = [".....", "...()", "..().", ".()..", "()...", ".(())", "(()).", ".()()", "().()", "()()."];
