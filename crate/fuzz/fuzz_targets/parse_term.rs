#![no_main]

use invsemi::term::parse_term;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let s = invsemi::semigroup::catalog("brandt_b2").unwrap();
    if let Ok(t) = parse_term(text, 2, &s) {
        let flat = t.flatten(&s);
        for p in [[0, 0], [1, 2], [4, 3]] {
            assert_eq!(t.evaluate(&p, &s).unwrap(), flat.evaluate(&p, &s).unwrap());
        }
    }
});
