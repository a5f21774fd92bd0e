use tlqkz::algebra::{AlgebraSpec, Kind};
use tlqkz::limits::{hotta_check, rational_limit};
use tlqkz::qkz::System;

#[test]
fn hotta_closure_type_a() {
    for n in [4, 6] {
        let sys = System::new(AlgebraSpec::new(Kind::A, n)).unwrap();
        let md = rational_limit(&sys.solve().unwrap()).unwrap();
        for site in hotta_check(&md, &sys.rep.e).unwrap() {
            let s = site.site;
            assert!(site.mu.is_some(), "N={n} α={s}: image leaves the span");
            assert!(site.nonneg_integer, "N={n} α={s}");
            assert!(site.involution, "N={n} α={s}");
            assert!(site.matches_row, "N={n} α={s}");
            assert!(!site.matches_col, "N={n} α={s}");
        }
    }
}
