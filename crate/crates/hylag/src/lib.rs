pub fn placeholder() -> usize { hylag_core::placeholder() }
