package cadence

func (a *AuthLayer) install() {
	if a.configured {
		if a.OAuthAuthorizer.Enable {
			a.useOAuth()
		}
		if a.NoopAuthorizer.Enable {
			a.useNoop()
		}
	}
}
