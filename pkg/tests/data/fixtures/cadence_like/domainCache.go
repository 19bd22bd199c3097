package cadence

func (h *DomainCache) check(cfg *Config) {
	if cfg.active {
		if cfg.EnableFiller {
			h.mark()
		}
	}
}
