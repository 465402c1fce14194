//! Runs Python against the module registered in an embedded interpreter.

use pyo3::ffi::c_str;
use pyo3::prelude::*;

fn run(code: &std::ffi::CStr) {
    pyo3::append_to_inittab!(nonrep_module);
    Python::attach(|py| {
        py.run(code, None, None).map_err(|e| e.display(py)).unwrap();
    });
}

use nonrep_py::nonrep_module;

#[test]
fn module_round_trip() {
    run(c_str!(
        r#"
import nonrep
g = nonrep.generate("outerplane_biconnected", 25, seed=4)
c = nonrep.colour_outerplane_single_block(g)
assert c.verified and c.distinct_colours() <= 7
assert nonrep.verify_colouring(g, c.colours) is None
assert len(nonrep.blocking_set_good_size(g)) not in (5, 7, 9, 10, 14, 17)
w = nonrep.generate("plane", 30, seed=2)
layers = nonrep.peeling_layering(w)
assert len(layers) == 30 and min(layers) == 0
bg, host = nonrep.blocking_graph(g, nonrep.blocking_set_even(g))
assert len(host) == len(bg)
try:
    nonrep.Graph.from_json("{")
except nonrep.ParseError:
    pass
else:
    raise AssertionError("bad JSON accepted")
assert issubclass(nonrep.ClassMismatch, nonrep.NonrepError)
"#
    ));
}
