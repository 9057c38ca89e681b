#![no_main]

use invsemi::eqgeo::Certificate;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let s = invsemi::semigroup::catalog("chain2").unwrap();
    if let Ok(c) = Certificate::parse(text, &s) {
        assert_eq!(Certificate::parse(&c.render(&s), &s).unwrap(), c);
    }
});
