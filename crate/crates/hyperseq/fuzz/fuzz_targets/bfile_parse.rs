#![no_main]

use libfuzzer_sys::fuzz_target;

// parse must never panic, and accepted input must re-render to a text that
// parses back to the same entries
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(entries) = hyperseq::bfile::parse_bfile(text) {
        let rendered: String = entries
            .iter()
            .map(|e| format!("{} {}\n", e.index, e.value))
            .collect();
        let again = hyperseq::bfile::parse_bfile(&rendered).expect("re-parse rendered entries");
        assert_eq!(entries, again);
    }
});
