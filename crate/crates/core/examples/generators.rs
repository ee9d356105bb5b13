//! Every generator family, rendered in the instance file format.
//!
//! ```bash
//! cargo run -p allones --example generators
//! ```

use allones::io::{gen, parse, render};

fn main() {
    let families = [
        ("path 4", gen::path(4)),
        ("cycle 5", gen::cycle(5)),
        ("complete 4", gen::complete(4)),
        ("grid 3x2", gen::grid(3, 2)),
        ("gnp 6 0.5 seed 7", gen::random_gnp(6, 0.5, 7)),
        ("tree 6 seed 7", gen::random_tree(6, 7)),
        ("gnp 6 0.5 seed 7, mixed labels", gen::random_mixed(6, 0.5, 7)),
    ];
    for (name, inst) in families {
        let text = render(&inst);
        assert_eq!(parse(&text).unwrap(), inst);
        println!("# {name}\n{text}");
    }
}
