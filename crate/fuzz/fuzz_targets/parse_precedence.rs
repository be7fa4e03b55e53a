#![no_main]

use libfuzzer_sys::fuzz_target;
use orderword::parse_precedence;

fuzz_target!(|data: &[u8]| {
    let Some((&rank, text)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(text) else { return };
    let rank = u32::from(rank % 27);
    if let Ok(order) = parse_precedence(text, rank) {
        let mut sorted = order.precedence().to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, (1..=rank).collect::<Vec<_>>());
    }
});
