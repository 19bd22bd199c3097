package cadence

func (d *AttrValidator) validate(types TypeRegistry) {
	if d.active {
		if types.ArchivalStatusEnabled {
			d.checkStatus()
		}
		if d.clusterMetadata.GetEnabledClusterInfo != nil {
			d.checkClusters()
		}
	}
}
