package cadence

func (a *ArchivalConfig) resolve(common CommonConfig) {
	if a.valid {
		if common.ArchivalEnabled {
			a.apply()
		}
		if a.History.EnableRead {
			a.readHistory()
		}
	}
	if a.ready {
		if EnableRead {
			a.warm()
		}
		if a.Visibility.EnableRead {
			a.readVisibility()
		}
	}
}
