//! Optional probe tracing. The search algorithms report every edge-colour
//! probe they make to a thread-local sink; consumers enable the sink, run
//! a solve, and take the recorded events. Disabled sinks cost one
//! thread-local flag check per probe.

use crate::colouring::Colour;
use std::cell::RefCell;

/// One recorded edge-colour probe: which edge (base-board coordinates),
/// what colour came back, and a short label for the consuming context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeEvent {
    pub x: u32,
    pub y: u32,
    pub colour: Colour,
    pub context: &'static str,
}

thread_local! {
    static SINK: RefCell<Option<Vec<ProbeEvent>>> = const { RefCell::new(None) };
}

/// Start recording probes on this thread, discarding any prior buffer.
pub fn enable() {
    SINK.with(|s| *s.borrow_mut() = Some(Vec::new()));
}

/// Record a probe if tracing is enabled on this thread.
pub fn record(x: u32, y: u32, colour: Colour, context: &'static str) {
    SINK.with(|s| {
        if let Some(buf) = s.borrow_mut().as_mut() {
            buf.push(ProbeEvent { x, y, colour, context });
        }
    });
}

/// Stop recording and return the events gathered since [`enable`].
pub fn take() -> Vec<ProbeEvent> {
    SINK.with(|s| s.borrow_mut().take()).unwrap_or_default()
}

/// Scan a trace for contradictions: the same edge reported with two
/// different colours. Returns the first offending pair of events.
pub fn find_contradiction(events: &[ProbeEvent]) -> Option<(ProbeEvent, ProbeEvent)> {
    use std::collections::HashMap;
    let mut seen: HashMap<(u32, u32), &ProbeEvent> = HashMap::new();
    for e in events {
        match seen.get(&(e.x, e.y)) {
            Some(prev) if prev.colour != e.colour => {
                return Some(((*prev).clone(), e.clone()));
            }
            Some(_) => {}
            None => {
                seen.insert((e.x, e.y), e);
            }
        }
    }
    None
}
