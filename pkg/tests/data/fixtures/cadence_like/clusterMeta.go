package cadence

func (h *ClusterMeta) check(cfg *Config) {
	if cfg.active {
		if cfg.EnableFiller {
			h.mark()
		}
	}
}
