package cadence

func (h *Dispatcher) check(cfg *Config) {
	if cfg.active {
		if cfg.EnableFiller {
			h.mark()
		}
	}
}
