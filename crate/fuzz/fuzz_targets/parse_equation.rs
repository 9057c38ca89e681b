#![no_main]

use invsemi::eqgeo::Equation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let s = invsemi::semigroup::catalog("sim2").unwrap();
    if let Ok(eq) = Equation::parse(text, 2, &s) {
        let shown = eq.display(&s).to_string();
        let again = Equation::parse(&shown, 2, &s).unwrap();
        assert_eq!(eq.holds_at(&[0, 6], &s), again.holds_at(&[0, 6], &s));
    }
});
