package cadence

func (h *Replicator) check(cfg *Config) {
	if cfg.active {
		if cfg.EnableFiller {
			h.mark()
		}
		if cfg.Features.EnableFiller {
			h.note()
		}
	}
}
