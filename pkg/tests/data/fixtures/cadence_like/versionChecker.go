package cadence

func (vc *VersionChecker) gate(featureFlags *FeatureFlags, flags FeatureFlags) {
	if vc.active {
		if featureFlags.WorkflowExecutionAlreadyCompletedErrorEnabled {
			vc.mark()
		}
		if flags.WorkflowExecutionAlreadyCompletedErrorEnabled {
			vc.mark()
		}
		if *featureFlags.WorkflowExecutionAlreadyCompletedErrorEnabled {
			vc.mark()
		}
	}
}
