package cadence

func (h *ClientBean) check(cfg *Config) {
	if cfg.active {
		if cfg.EnableFiller {
			h.mark()
		}
	}
}
