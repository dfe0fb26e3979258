#![no_main]

use libfuzzer_sys::fuzz_target;
use powspec::LabeledGraph;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let n = usize::from(n % 65);
    if let Ok(g) = LabeledGraph::parse_edge_list(n, text) {
        let again = LabeledGraph::parse_edge_list(n, &g.to_edge_list()).unwrap();
        assert_eq!(again, g);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }
});
