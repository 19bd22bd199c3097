package hidden

func Y() {
	use(DeadSwitch)
}
