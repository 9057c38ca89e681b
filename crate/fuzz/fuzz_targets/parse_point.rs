#![no_main]

use invsemi::eqgeo::{display_point, parse_point, parse_point_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let s = invsemi::semigroup::catalog("z2_zero").unwrap();
    if let Ok(p) = parse_point(text, 2, &s) {
        assert_eq!(parse_point(&display_point(&p, &s), 2, &s).unwrap(), p);
    }
    let _ = parse_point_list(text, 2, &s);
});
