#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = invsemi::semigroup::parse_table(text) {
        let again = invsemi::semigroup::parse_table(&invsemi::semigroup::render_table(&s)).unwrap();
        assert_eq!(s.names(), again.names());
        assert!(s.structure_violations().is_empty());
    }
});
