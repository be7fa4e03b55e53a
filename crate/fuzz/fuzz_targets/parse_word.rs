#![no_main]

use libfuzzer_sys::fuzz_target;
use orderword::parse_word;

fuzz_target!(|data: &[u8]| {
    let Some((&rank, text)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(text) else { return };
    let rank = u32::from(rank % 27);
    if let Ok(w) = parse_word(text, rank) {
        assert_eq!(parse_word(&w.to_string(), rank).unwrap(), w);
        assert!(w.len() <= text.chars().count());
        assert!(w.mul(&w.inverse()).is_empty());
    }
});
