#![no_main]

use libfuzzer_sys::fuzz_target;
use num_traits::Zero;

// the tolerance parser must never panic, never accept a zero denominator,
// and accepted values must round-trip through their canonical rendering
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((num, den)) = hyperseq::sequence::parse_eps(text) {
        assert!(!den.is_zero());
        let again = hyperseq::sequence::parse_eps(&format!("{num}/{den}")).unwrap();
        assert_eq!((num, den), again);
    }
});
