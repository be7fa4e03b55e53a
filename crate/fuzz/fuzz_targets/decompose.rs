#![no_main]

use libfuzzer_sys::fuzz_target;
use orderword::order::decompose;
use orderword::{is_ascent, is_descent, parse_word, MagnusOrder};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 16 {
        return;
    }
    let Ok(w) = parse_word(text, 3) else { return };
    let core = w.cyclically_reduce().0;
    if core.len() < 2 || core.is_periodic().unwrap() {
        return;
    }
    let order = MagnusOrder::canonical(3);
    let d = decompose(&core, &order).unwrap();
    assert_eq!(d.ascent.mul(&d.descent), d.chosen);
    assert!(is_ascent(&d.ascent, &order).unwrap());
    assert!(d.descent.is_empty() || is_descent(&d.descent, &order).unwrap());
    assert!(core.rotation_set().unwrap().uniquely_positioned(&d.ascent).unwrap());
});
