package cadence

const (
	ArchivalEnabled                               = true
	ArchivalStatusEnabled                         = true
	Enable                                        = true
	EnableFiller                                  = true
	EnableRead                                    = true
	GetEnabledClusterInfo                         = true
	WorkflowExecutionAlreadyCompletedErrorEnabled = false
)
