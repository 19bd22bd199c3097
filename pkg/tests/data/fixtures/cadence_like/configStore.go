package cadence

func (h *ConfigStore) check(cfg *Config) {
	if cfg.active {
		if cfg.EnableFiller {
			h.mark()
		}
	}
}
