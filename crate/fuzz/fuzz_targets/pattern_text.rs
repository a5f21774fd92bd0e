#![no_main]

use libfuzzer_sys::fuzz_target;
use tlqkz::patterns::Pattern;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Pattern::parse(s) {
        assert_eq!(Pattern::parse(&p.text()).unwrap(), p);
        assert_eq!(Pattern::from_partners(p.partners().to_vec()).unwrap(), p);
        for i in p.opens() {
            let _ = p.remove_open(i).unwrap();
        }
    }
});
